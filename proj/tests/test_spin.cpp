#include <doctest.h>

#include "lch/reps.hpp"
#include "lch/spin.hpp"
#include "support.hpp"

using namespace lch;

TEST_SUITE("spin") {
    TEST_CASE("shell gradings and actions") {
        DGA d;
        d.add("c", 0, {}, Action{2, 3, 0});
        d.add("e", 1);
        auto sh = spun_shell(d, 2);
        REQUIRE(sh.spun.size() == 4);
        CHECK(sh.spun.alg.gen(sh.s_gen[0]).grading == 0);
        CHECK(sh.spun.alg.gen(sh.n_gen[0]).grading == 2);
        CHECK(sh.spun.alg.gen(sh.n_gen[0]).action->eps_power == 1);
        CHECK(sh.spun.alg.gen(sh.n_gen[0]).action->num == 2);
        CHECK(spun_shell(d, 1).spun.alg.gen(3).grading == 2);
        CHECK(!sh.n_differential_known);
        CHECK_THROWS_AS(retraction(sh), Error);
        CHECK(spun_shell(DGA{}, 1).spun.size() == 0);
        CHECK_THROWS_AS(spun_shell(d, 0), Error);
    }

    TEST_CASE("minimal model retraction of the trefoil") {
        auto t = load_dga(lcht::fixture("trefoil.dga"));
        for (int m : {1, 2, 3}) {
            auto sh = minimal_model(t, m);
            CHECK(check_dga(sh.spun).empty());
            CHECK(verify_retraction(retraction(sh)).empty());
        }
    }

    TEST_CASE("a Q_N differential leaving <Q_N> is rejected") {
        auto t = load_dga(lcht::fixture("trefoil.dga"));
        auto sh = minimal_model(t, 1);
        std::vector<Poly> dn(t.size());
        dn[0] = Poly::gen(sh.s_gen[0]);  // d a1_N = a1_S
        auto bad = with_n_differential(sh, dn);
        CHECK(!verify_retraction(retraction(bad)).empty());
        CHECK_THROWS_AS(with_n_differential(sh, std::vector<Poly>(2)), Error);
    }

    TEST_CASE("augmentations round-trip") {
        auto t = load_dga(lcht::fixture("trefoil.dga"));
        auto augs = find_augmentations(t, false).augs;
        for (int m : {1, 2}) {
            auto r = retraction(minimal_model(t, m));
            for (const auto& e : augs) {
                auto up = transfer_up(r, e);
                CHECK(is_augmentation(r.pi.source, up));
                for (std::size_t i = t.size(); i < up.values.size(); ++i) CHECK(up.values[i] == 0);
                CHECK(transfer_down(r, up) == e);
            }
        }
    }

    TEST_CASE("graded payloads stay graded") {
        auto t = load_dga(lcht::fixture("trefoil.dga"));
        auto r = retraction(minimal_model(t, 2));
        for (const auto& e : find_augmentations(t, true).augs) {
            auto up = transfer_up(r, e);
            CHECK(up.graded);
            CHECK(is_augmentation(r.pi.source, up));
            auto rho = transfer_up(r, to_rep(e));
            CHECK(rho.graded);
            CHECK(verify_rep(r.pi.source, rho));
            CHECK(transfer_down(r, rho).values == to_rep(e).values);
        }
    }

    TEST_CASE("acyclicity transfers") {
        DGA d;
        auto b = d.add("b", 0);
        d.add("a", 1, Poly::one() + Poly::gen(b));
        d.add("c", 1, Poly::gen(b));
        auto r = retraction(minimal_model(d, 1));
        auto a = transfer_acyclicity(r);
        CHECK(a.base == Tri::yes);
        CHECK(a.spun == Tri::yes);
        CHECK(a.consistent);
        auto t = load_dga(lcht::fixture("trefoil.dga"));
        auto at = transfer_acyclicity(retraction(minimal_model(t, 1)));
        CHECK(at.base != Tri::yes);
        CHECK(at.spun == at.base);
        CHECK(at.consistent);
    }

    TEST_CASE("product Betti numbers") {
        CHECK(product_betti({}) == std::vector<int>{1, 1});
        CHECK(product_betti({2}) == std::vector<int>{1, 1, 1, 1});
        CHECK(product_betti({1}) == std::vector<int>{1, 2, 1});
        for (auto dims : std::vector<std::vector<int>>{{1, 2, 7}, {3, 3}, {2, 5, 1}}) {
            auto b = product_betti(dims);
            CHECK(std::equal(b.begin(), b.end(), b.rbegin()));
            int s = 0;
            for (int x : b) s += x;
            CHECK(s == (2 << dims.size()));
        }
        CHECK_THROWS_AS(product_betti({0}), Error);
    }
}
