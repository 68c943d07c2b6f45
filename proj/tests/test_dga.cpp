#include <doctest.h>

#include "lch/dga.hpp"
#include "support.hpp"

using namespace lch;

namespace {

// Rank over Z/2 of a dense 0/1 matrix, rows as int vectors.
int rank_mod2(lcht::IMat m) {
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < m.size() && !m[piv][c]) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && m[r][c])
                for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[static_cast<std::size_t>(rank)][k];
        ++rank;
    }
    return rank;
}

// Linearized homology by direct expansion: (x+e)-substitution, length-one part, ranks.
std::map<int, int> oracle_homology(const DGA& d, const std::vector<std::uint8_t>& eps) {
    const std::size_t n = d.size();
    std::vector<Poly> sig;
    for (std::size_t i = 0; i < n; ++i) {
        auto g = Poly::gen(static_cast<Letter>(i));
        sig.push_back(eps[i] ? g + Poly::one() : g);
    }
    lcht::IMat full(n, std::vector<int>(n));  // full[i][j]: coefficient of i in d j
    for (std::size_t j = 0; j < n; ++j) {
        const Poly s = substitute(d.d[j], sig);
        for (const auto& w : s.terms())
            if (w.size() == 1) full[w[0]][j] ^= 1;
    }
    std::map<int, std::vector<std::size_t>> deg;
    for (std::size_t i = 0; i < n; ++i) deg[d.alg.grading(static_cast<Letter>(i))].push_back(i);
    auto block = [&](int from) {
        int to = d.alg.reduce(static_cast<long long>(from) - 1);
        if (!deg.count(from) || !deg.count(to)) return 0;
        lcht::IMat m;
        for (auto r : deg[to]) {
            m.emplace_back();
            for (auto c : deg[from]) m.back().push_back(full[r][c]);
        }
        return rank_mod2(m);
    };
    std::map<int, int> out;
    for (const auto& [g, idx] : deg)
        out[g] = static_cast<int>(idx.size()) - block(g) - block(d.alg.reduce(static_cast<long long>(g) + 1));
    return out;
}

}  // namespace

TEST_SUITE("dga") {
    TEST_CASE("check_dga") {
        DGA ok;
        auto b = ok.add("b", 0);
        ok.add("a", 1, Poly::gen(b));
        CHECK(check_dga(ok).empty());

        DGA bad;
        auto b2 = bad.add("b", 0);
        bad.add("a", 1, Poly::gen(b2));
        bad.d[b2] = Poly::one();
        CHECK(!check_dga(bad).empty());

        DGA wrong;
        auto c = wrong.add("c", 0);
        wrong.add("a", 2, Poly::gen(c));
        CHECK(!check_dga(wrong).empty());

        CHECK(check_dga(load_dga(lcht::fixture("trefoil.dga"))).empty());
    }

    TEST_CASE("stabilization") {
        auto s = stabilize(DGA{}, 1);
        REQUIRE(s.size() == 2);
        CHECK(s.d[0] == Poly::gen(1));
        CHECK(s.alg.gen(1).grading == 0);
        CHECK(check_dga(s).empty());

        auto t = load_dga(lcht::fixture("trefoil.dga"));
        auto ts = stabilize(t, 1);
        CHECK(check_dga(ts).empty());
        CHECK(lcht::brute_aug_count(ts, false) == 2 * lcht::brute_aug_count(t, false));
        CHECK(lcht::brute_aug_count(ts, true) == lcht::brute_aug_count(t, true));
        CHECK(lcht::brute_aug_count(stabilize(t, 5), true) == lcht::brute_aug_count(t, true));
    }

    TEST_CASE("linearization drops words of length other than one") {
        DGA d;
        auto b = d.add("b", 0);
        auto c = d.add("c", 0);
        d.add("a", 1, Poly::gen(b) + Poly::gen(b) * Poly::gen(c));
        Augmentation zero{{0, 0, 0}, false};
        auto lc = linearize(d, zero);
        CHECK(lc.boundary.get(b, 2));
        CHECK(!lc.boundary.get(c, 2));
        CHECK((lc.boundary * lc.boundary).is_zero());
    }

    TEST_CASE("homology basics") {
        LinearComplex z;
        z.gradings = {0, 1};
        z.names = {"u", "v"};
        z.boundary = BitMatrix(2, 2);
        auto h = homology(z);
        CHECK(h[0] == 1);
        CHECK(h[1] == 1);
        auto s = stabilize(DGA{}, 1);
        auto hs = homology(linearize(s, Augmentation{{0, 0}, false}));
        for (const auto& [g, n] : hs) CHECK(n == 0);
    }

    TEST_CASE("trefoil linearized homology against the expansion oracle") {
        auto t = load_dga(lcht::fixture("trefoil.dga"));
        int seen = 0;
        for (std::uint32_t m = 0; m < 32; ++m) {
            std::vector<std::uint8_t> v(5);
            for (int i = 0; i < 5; ++i) v[i] = (m >> i) & 1;
            Augmentation e{v, false};
            if (!is_augmentation(t, e)) continue;
            auto lc = linearize(t, e);
            CHECK((lc.boundary * lc.boundary).is_zero());
            CHECK(homology(lc) == oracle_homology(t, v));
            CHECK(euler_characteristic(homology(lc)) == euler_characteristic(lc));
            ++seen;
        }
        CHECK(seen == 20);
        // graded augmentation a2 = 1: homology t + 2
        auto h = homology(linearize(t, Augmentation{{0, 1, 0, 0, 0}, true}));
        CHECK(h[0] == 2);
        CHECK(h[1] == 1);
    }

    TEST_CASE("linearize rejects non-augmentations") {
        auto t = load_dga(lcht::fixture("trefoil.dga"));
        CHECK_THROWS_AS(linearize(t, Augmentation{{0, 0, 0, 0, 0}, false}), Error);
    }

    TEST_CASE("sigma_eps is an involution") {
        lcht::Rng rng(5);
        for (int i = 0; i < 200; ++i) {
            auto p = lcht::random_poly(rng, 4, 4, 5);
            std::vector<Poly> sig;
            for (int j = 0; j < 4; ++j) sig.push_back(rng() & 1 ? Poly::gen(j) + Poly::one() : Poly::gen(j));
            CHECK(substitute(substitute(p, sig), sig) == p);
        }
    }

    TEST_CASE("morphisms") {
        auto t = load_dga(lcht::fixture("trefoil.dga"));
        std::vector<Poly> id;
        for (std::size_t i = 0; i < t.size(); ++i) id.push_back(Poly::gen(static_cast<Letter>(i)));
        CHECK(verify_morphism({t, t, id}).empty());

        DGA d;
        auto b = d.add("b", 0);
        d.add("a", 1, Poly::gen(b));
        CHECK(!verify_morphism({d, d, {Poly::zero(), Poly::one()}}).empty());
    }

    TEST_CASE("text format round trip") {
        auto t = load_dga(lcht::fixture("trefoil.dga"));
        auto u = parse_dga(format_dga(t));
        CHECK(format_dga(u) == format_dga(t));
        CHECK(u.d == t.d);

        auto p = load_dga(lcht::fixture("m10_132_partial.dga"));
        CHECK(p.partial);
        CHECK(p.extra.size() == 2);
        CHECK(parse_dga(format_dga(p)).relations() == p.relations());

        CHECK_THROWS_AS(parse_dga("gen a 1\nd b = a\n"), ParseError);
        CHECK_THROWS_AS(parse_dga("gen a x\n"), ParseError);
        CHECK_THROWS_AS(parse_dga("gen a 1\ngen a 2\n"), ParseError);
    }

    TEST_CASE("random DGAs built for tests satisfy d^2 = 0") {
        lcht::Rng rng(9);
        for (int i = 0; i < 200; ++i) CHECK(check_dga(lcht::random_dga(rng, 6)).empty());
    }
}
