#include <doctest.h>

#include "lch/charalg.hpp"
#include "lch/dga.hpp"
#include "support.hpp"

using namespace lch;

namespace {

Algebra names(std::initializer_list<const char*> ns) {
    Algebra a;
    for (auto n : ns) a.add_generator(n, 0);
    return a;
}

}  // namespace

TEST_SUITE("charalg") {
    TEST_CASE("single relation xy + 1") {
        auto A = names({"x", "y"});
        auto rs = complete({parse_poly(A, "xy+1")});
        CHECK(rs.complete_up_to_bound);
        REQUIRE(rs.rules.size() == 1);
        CHECK(rs.rules[0].lead == Word{0, 1});
        CHECK(rs.rules[0].rest == Poly::one());
        CHECK(normal_form(rs, parse_poly(A, "yxyx")) == parse_poly(A, "yx"));
        CHECK(contains_unit(rs) == Tri::no_up_to_bound);
    }

    TEST_CASE("unit detection") {
        auto A = names({"a"});
        auto rs = complete({parse_poly(A, "a"), parse_poly(A, "1+a")});
        CHECK(contains_unit(rs) == Tri::yes);
        CHECK(normal_form(rs, parse_poly(A, "a^3 + 1")).is_zero());
    }

    TEST_CASE("normal form is idempotent and fixes reduced input") {
        auto A = names({"x", "y", "q"});
        auto rs = complete({parse_poly(A, "xy+1"), parse_poly(A, "xq")});
        CHECK(normal_form(rs, parse_poly(A, "x(1+yx)q")).is_zero());
        auto p = parse_poly(A, "yq + qy");
        CHECK(normal_form(rs, p) == p);
        lcht::Rng rng(2);
        for (int i = 0; i < 100; ++i) {
            auto r = lcht::random_poly(rng, 3, 5, 5);
            auto n1 = normal_form(rs, r);
            CHECK(normal_form(rs, n1) == n1);
        }
    }

    TEST_CASE("section five relations") {
        auto A = names({"x", "y", "p", "q", "x11", "x22"});
        std::vector<Poly> rel{parse_poly(A, "xy+1"), parse_poly(A, "x11"), parse_poly(A, "xq"),
                              parse_poly(A, "1 + x11 x22 + pq")};
        auto rs = complete(rel, 8);
        CHECK(normal_form(rs, parse_poly(A, "pq+1")).is_zero());
        CHECK(normal_form(rs, parse_poly(A, "p(1+yx)q+1")).is_zero());
        auto w = fact51_witness(Poly::gen(0), Poly::gen(1), Poly::gen(2), Poly::gen(3));
        CHECK(verify_rank_witness(rs, w));
    }

    TEST_CASE("partial m(10_132) fixture") {
        auto d = load_dga(lcht::fixture("m10_132_partial.dga"));
        auto rs = complete(d.relations(), 8);
        CHECK(contains_unit(rs) == Tri::no_up_to_bound);
        const auto& A = d.alg;
        auto x = parse_poly(A, "1+x5(x2+x3)"), y = parse_poly(A, "x20"), p = parse_poly(A, "x13+x8(x2+x3)"),
             q = parse_poly(A, "x18");
        CHECK(normal_form(rs, p * q + Poly::one()).is_zero());
        CHECK(verify_rank_witness(rs, fact51_witness(x, y, p, q)));
    }

    TEST_CASE("rank witness over xy+1, p(1+yx)q+1") {
        auto A = names({"x", "y", "p", "q"});
        auto w = fact51_witness(Poly::gen(0), Poly::gen(1), Poly::gen(2), Poly::gen(3));
        CHECK(w.m == 2);
        CHECK(w.n == 1);
        CHECK(w.A[1][0] == parse_poly(A, "p(1+yx)"));
        CHECK(w.B[0][1] == parse_poly(A, "(1+yx)q"));
        CHECK(verify_rank_witness(complete({parse_poly(A, "xy+1"), parse_poly(A, "p(1+yx)q+1")}), w));
        CHECK(!verify_rank_witness(complete({}), w));

        RankWitness e;
        e.m = 2;
        e.n = 1;
        e.A = {{Poly::one()}, {Poly::zero()}};
        e.B = {{Poly::one(), Poly::zero()}};
        CHECK(!verify_rank_witness(complete({}), e));
        e.B = {{Poly::one()}};
        CHECK_THROWS_AS(verify_rank_witness(complete({}), e), Error);
    }

    TEST_CASE("brute_member oracle") {
        auto A = names({"x", "y"});
        std::vector<Poly> rel{parse_poly(A, "xy+1")};
        CHECK(brute_member(rel, parse_poly(A, "xy+1"), 6, 2));
        CHECK(!brute_member(rel, Poly::one(), 6, 2));
        CHECK(brute_member(rel, parse_poly(A, "yxy + y"), 6, 2));
    }

    TEST_CASE("rewriting agrees with brute force on homogeneous ideals") {
        lcht::Rng rng(17);
        int cases = 0;
        for (int i = 0; i < 200; ++i) {
            std::vector<Poly> rel;
            for (int r = 0; r < 2; ++r) {
                // homogeneous of degree 2
                auto p = lcht::random_poly(rng, 3, 2, 3);
                std::vector<Word> ws;
                for (const auto& w : p.terms())
                    if (w.size() == 2) ws.push_back(w);
                if (!ws.empty()) rel.emplace_back(ws);
            }
            if (rel.empty()) continue;
            auto rs = complete(rel, 5);
            if (!rs.complete_up_to_bound) continue;
            auto q = lcht::random_poly(rng, 3, 4, 3) * rel[0] * lcht::random_poly(rng, 3, 1, 2);
            std::vector<Word> top;
            for (const auto& w : q.terms())
                if (w.size() <= 5) top.push_back(w);
            Poly t(top);
            CHECK(normal_form(rs, t).is_zero() == brute_member(rel, t, 5, 3));
            ++cases;
        }
        CHECK(cases > 50);
    }
}
