#pragma once

// Algebraic side of front spinning: the doubled generator set, the retraction
// pair (iota, pi) and transport of augmentations, representations and
// acyclicity along it.

#include <string>
#include <vector>

#include "lch/charalg.hpp"
#include "lch/dga.hpp"
#include "lch/reps.hpp"

namespace lch {

struct SpunShell {
    DGA base;
    int m = 1;
    // spun.alg lists c_S for every base chord, then every c_N. The S-part of
    // the differential is iota of the base one; N-part entries are zero and
    // n_differential_known says whether that is a real choice.
    DGA spun;
    bool n_differential_known = false;
    std::vector<Letter> s_gen, n_gen;  // indexed by base generator
};

SpunShell spun_shell(const DGA& base, int m);
// The shell with d q_N = 0, d q_S = iota(d c).
SpunShell minimal_model(const DGA& base, int m);
// Replaces the N-part differentials (indexed by base generator).
SpunShell with_n_differential(const SpunShell& shell, const std::vector<Poly>& dn);

struct RetractionPair {
    DGAMorphism iota;  // base -> spun
    DGAMorphism pi;    // spun -> base
};

RetractionPair retraction(const SpunShell& shell);
std::vector<std::string> verify_retraction(const RetractionPair& r);

// Base to spun composes with pi, spun to base composes with iota. Results are
// re-verified and Error is thrown if they fail.
Augmentation transfer_up(const RetractionPair& r, const Augmentation& eps);
Augmentation transfer_down(const RetractionPair& r, const Augmentation& eps);
MatrixRep transfer_up(const RetractionPair& r, const MatrixRep& rho);
MatrixRep transfer_down(const RetractionPair& r, const MatrixRep& rho);

struct AcyclicityTransfer {
    Tri base = Tri::unknown;
    Tri spun = Tri::unknown;
    bool consistent = true;  // both decided and equal, or at least one unknown
};
AcyclicityTransfer transfer_acyclicity(const RetractionPair& r, int degree_bound = kDefaultBound);

// Betti numbers of S^1 x S^{m_1} x ... x S^{m_s} over a field.
std::vector<int> product_betti(const std::vector<int>& sphere_dims);

}  // namespace lch
