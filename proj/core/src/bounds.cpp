#include "lch/bounds.hpp"

#include <algorithm>
#include <cstdlib>

#include "lch/charalg.hpp"

namespace lch {

int ChordCensus::total() const {
    int t = 0;
    for (const auto& [g, k] : c) t += k;
    return t;
}

ChordCensus census_from_dga(const DGA& dga, int n) {
    ChordCensus c;
    c.n = n;
    c.modulus = dga.alg.modulus();
    c.lifted = c.modulus > 0;
    for (const auto& g : dga.alg.generators()) c.c[g.grading]++;
    return c;
}

namespace {

int parity_of(int g, int modulus) {
    if (modulus > 0) {
        if (modulus % 2 != 0) throw Error("parity classes need an even grading modulus");
        g = ((g % modulus) + modulus) % modulus;
    }
    return ((g % 2) + 2) % 2;
}

void check_betti(const BettiVector& b, int n) {
    if (b.size() != static_cast<std::size_t>(n) + 1) throw Error("need Betti numbers b_0..b_n");
    for (int x : b)
        if (x < 0) throw Error("negative Betti number");
}

}  // namespace

ParityReport arnold_parity_check(const BettiVector& b, const ChordCensus& c) {
    check_betti(b, c.n);
    ParityReport r;
    for (std::size_t i = 0; i < b.size(); ++i) (i % 2 == 0 ? r.even : r.odd).betti_sum += b[i];
    for (const auto& [g, k] : c.c) {
        if (k < 0) throw Error("negative chord count");
        (parity_of(g, c.modulus) == 0 ? r.even : r.odd).chord_sum += k;
    }
    for (auto* v : {&r.even, &r.odd}) v->ok = v->betti_sum <= 2 * v->chord_sum;
    return r;
}

bool DegreeReport::ok() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeVerdict& d) { return d.ok; });
}

namespace {

DegreeReport graded(const BettiVector& b, const ChordCensus& c, long long scale) {
    check_betti(b, c.n);
    if (c.modulus != 0 && !c.lifted) throw Error("degree-wise check needs integer gradings");
    DegreeReport r;
    for (int i = 0; i <= c.n; ++i) {
        DegreeVerdict d;
        d.i = i;
        d.lhs = scale * b[static_cast<std::size_t>(i)];
        d.rhs = scale * c.at(c.n - i) + scale * c.at(i);
        d.ok = d.lhs <= d.rhs;
        r.degrees.push_back(d);
    }
    return r;
}

}  // namespace

DegreeReport arnold_graded_check(const BettiVector& b, const ChordCensus& c) { return graded(b, c, 1); }

LesReport les_rank_check(const BettiVector& b, const ChordCensus& c, int k) {
    if (k < 1) throw Error("representation dimension must be positive");
    const long long k4 = 1LL * k * k * k * k;
    LesReport r;
    r.scaled = graded(b, c, k4);
    auto plain = graded(b, c, 1);
    r.same_as_unscaled = true;
    for (std::size_t i = 0; i < plain.degrees.size(); ++i)
        if (plain.degrees[i].ok != r.scaled.degrees[i].ok) r.same_as_unscaled = false;
    return r;
}

ChiTbReport chi_tb_check(const ChordCensus& c, int chi, int tb) {
    if (c.n % 2 != 0) throw Error("the chi/tb identities need even dimension");
    const int k = c.n / 2;
    ChiTbReport r;
    r.sign = ((c.n - 2) * (c.n - 1) / 2) % 2 == 0 ? 1 : -1;
    for (const auto& [g, cnt] : c.c) (parity_of(g, c.modulus) == 0 ? r.c_even : r.c_odd) += cnt;
    r.tb_from_census = tb == r.sign * (r.c_even - r.c_odd);
    const int sk = (k + 1) % 2 == 0 ? 1 : -1;
    r.tb_from_chi = chi % 2 == 0 && 2 * tb == sk * chi;
    r.derived_applies = chi >= 0;
    r.derived = 2 * r.c_even == std::abs(chi) + 2 * r.c_odd;
    return r;
}

ChordBound min_chords(int chi, int n, const ChordFlags& f) {
    ChordBound b{1, "at least one chord"};
    const int half = (std::abs(chi) + 1) / 2;
    if (n % 2 == 0 && half > b.bound) b = {half, "half |chi| double points"};
    if (f.nontrivial_charalg_no_findim_rep) {
        if (3 > b.bound) b = {3, "non-trivial characteristic algebra without finite-dimensional representations"};
        const bool case1 = chi >= 0;
        const bool case2 = f.maslov_zero && f.nonneg_gradings;
        if (n % 2 == 0 && f.orientable && (case1 || case2)) {
            const int v = std::abs(chi) / 2 + 2;
            if (v > b.bound) b = {v, case1 ? "half |chi| + 2 (chi >= 0)" : "half |chi| + 2 (integer grading, non-negative degrees)"};
        }
    }
    return b;
}

namespace {

// Letters appearing in a polynomial.
std::vector<Letter> support(const Poly& p) {
    std::vector<Letter> out;
    for (const auto& w : p.terms())
        for (auto l : w)
            if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    return out;
}

}  // namespace

SmallRep small_dga_rep(const DGA& dga, std::uint64_t budget) {
    const std::size_t n = dga.size();
    if (n > 2) throw Error("small_dga_rep handles at most two generators");
    auto rels = dga.relations();
    for (const auto& r : rels)
        if (r.max_letter() >= static_cast<int>(n)) throw Error("relation uses an unknown generator");
    if (contains_unit(complete(rels)) == Tri::yes) throw Error("the DGA is acyclic: no representation");

    SmallRep out;
    if (rels.empty()) {
        out.rep.k = 1;
        out.rep.values.assign(n, BitMatrix(1, 1));
        out.method = "trivial differential: all generators to 0";
        return out;
    }
    // all relations in one generator g
    std::vector<Letter> letters;
    for (const auto& r : rels)
        for (auto l : support(r))
            if (std::find(letters.begin(), letters.end(), l) == letters.end()) letters.push_back(l);
    if (letters.size() <= 1) {
        const Letter g = letters.empty() ? 0 : letters[0];
        std::uint64_t p = 0;
        for (const auto& r : rels) p = gf2x_gcd(p, univariate_bits(r, g));
        if (p == 1) throw Error("the DGA is acyclic: no representation");
        Poly q;
        for (int i = 0; i < 64; ++i)
            if ((p >> i) & 1) q += pow(Poly::gen(g), static_cast<unsigned>(i));
        out.rep = companion_rep(q, g, n);
        out.method = "companion matrix of gcd of the relations in " + dga.alg.gen(g).name;
    } else {
        bool found = false;
        for (int k = 1; k <= 3 && !found; ++k) {
            auto rs = find_matrix_reps(rels, n, k, budget, {}, 1);
            if (!rs.reps.empty()) {
                out.rep = rs.reps.front();
                out.method = "search at k = " + std::to_string(k);
                found = true;
            }
        }
        if (!found) throw Error("no representation of dimension <= 3 found within the budget");
    }
    if (!verify_rep(rels, out.rep)) throw Error("small_dga_rep produced an unverified representation");
    return out;
}

}  // namespace lch
