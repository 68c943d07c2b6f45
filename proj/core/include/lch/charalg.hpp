#pragma once

// The characteristic algebra A/<d c> as a degree-bounded rewriting system.

#include <cstdint>
#include <string>
#include <vector>

#include "lch/freealg.hpp"

namespace lch {

struct Rule {
    Word lead;
    Poly rest;
    // Upper bound on the length of the products w r w' of input relations
    // needed to express lead + rest.
    int height = 0;
};

struct RewriteSystem {
    std::vector<Rule> rules;
    int degree_bound = 8;
    bool complete_up_to_bound = true;
    bool unit = false;
};

inline constexpr int kDefaultBound = 8;

RewriteSystem complete(const std::vector<Poly>& ideal, int degree_bound = kDefaultBound);

// Rewrites the largest reducible term first, using the lowest-index rule at its
// leftmost occurrence. If height is given it receives the largest product
// length used by the reduction steps.
Poly normal_form(const RewriteSystem& rs, const Poly& p, int* height = nullptr);

enum class Tri { yes, no_up_to_bound, unknown };
std::string to_string(Tri t);

Tri contains_unit(const RewriteSystem& rs);

struct RankWitness {
    std::vector<std::vector<Poly>> A;  // m x n
    std::vector<std::vector<Poly>> B;  // n x m
    int m = 0;
    int n = 0;
};

bool verify_rank_witness(const RewriteSystem& rs, const RankWitness& w);

// A = (x, p(1+yx))^T, B = (y, (1+yx)q).
RankWitness fact51_witness(const Poly& x, const Poly& y, const Poly& p, const Poly& q);

// Membership of p in span{ w r w' : |w| + deg r + |w'| <= max_len } by
// Gaussian elimination on the word basis. Independent of the rewriting code.
bool brute_member(const std::vector<Poly>& ideal, const Poly& p, int max_len, std::size_t ngens);

}  // namespace lch
