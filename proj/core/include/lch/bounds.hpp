#pragma once

// Chord-count inequalities and identities as plain arithmetic checks.

#include <map>
#include <string>
#include <vector>

#include "lch/dga.hpp"
#include "lch/reps.hpp"

namespace lch {

struct ChordCensus {
    std::map<int, int> c;  // grading -> number of chords
    int n = 1;             // dimension of the Legendrian
    int modulus = 0;
    bool lifted = false;   // integer gradings supplied although modulus > 0

    int at(int i) const {
        auto it = c.find(i);
        return it == c.end() ? 0 : it->second;
    }
    int total() const;
};

// Uses the integer gradings as written in the DGA; lifted when modulus > 0.
ChordCensus census_from_dga(const DGA& dga, int n);

using BettiVector = std::vector<int>;  // b_0 .. b_n

struct ParityVerdict {
    int betti_sum = 0;  // sum of b_i over the class
    int chord_sum = 0;  // sum of c_i over the class
    bool ok = false;    // betti_sum <= 2 * chord_sum
};

struct ParityReport {
    ParityVerdict even, odd;
    bool ok() const { return even.ok && odd.ok; }
};

// Half the Betti sum over a parity class is at most the chord count there.
// Gradings are reduced mod the census modulus first; odd moduli are rejected.
ParityReport arnold_parity_check(const BettiVector& b, const ChordCensus& c);

struct DegreeVerdict {
    int i = 0;
    long long lhs = 0, rhs = 0;
    bool ok = false;
};

struct DegreeReport {
    std::vector<DegreeVerdict> degrees;
    bool ok() const;
};

// b_i <= c_i + c_{n-i} for 0 <= i <= n. Needs integer gradings.
DegreeReport arnold_graded_check(const BettiVector& b, const ChordCensus& c);

struct LesReport {
    DegreeReport scaled;  // k^4 b_i <= k^4 c_{n-i} + k^4 c_i
    bool same_as_unscaled = false;
    bool ok() const { return scaled.ok(); }
};

LesReport les_rank_check(const BettiVector& b, const ChordCensus& c, int k);

struct ChiTbReport {
    int sign = 1;          // (-1)^{(n-2)(n-1)/2}
    int c_even = 0, c_odd = 0;
    bool tb_from_census = false;  // tb = sign (c_even - c_odd)
    bool tb_from_chi = false;     // tb = (-1)^{k+1} chi / 2
    bool derived_applies = false;  // chi >= 0
    bool derived = false;          // c_even = |chi|/2 + c_odd
    bool ok() const { return tb_from_census && tb_from_chi && (!derived_applies || derived); }
};

// n must be even.
ChiTbReport chi_tb_check(const ChordCensus& c, int chi, int tb);

struct ChordFlags {
    bool nontrivial_charalg_no_findim_rep = false;
    bool orientable = false;
    bool nonneg_gradings = false;
    bool maslov_zero = false;
};

struct ChordBound {
    int bound = 1;
    std::string reason;
};

ChordBound min_chords(int chi, int n, const ChordFlags& flags);

struct SmallRep {
    MatrixRep rep;
    std::string method;
};

// At most two generators, not acyclic: a verified finite-dimensional
// representation. Univariate relations use the companion matrix of their gcd.
SmallRep small_dga_rep(const DGA& dga, std::uint64_t budget = kDefaultBudget);

}  // namespace lch
