#pragma once

// Augmentations and matrix representations over Z/2.

#include <cstdint>
#include <limits>
#include <vector>

#include "lch/dga.hpp"
#include "lch/gf2.hpp"

namespace lch {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct MatrixRep {
    int k = 1;
    std::vector<BitMatrix> values;
    bool graded = false;
    friend bool operator==(const MatrixRep&, const MatrixRep&) = default;
};

MatrixRep to_rep(const Augmentation& eps);

struct AugSearch {
    std::vector<Augmentation> augs;
    bool truncated = false;
    std::uint64_t nodes = 0;
};

// Backtracking over generators ordered by how many relations use them;
// a relation is evaluated as soon as its support is assigned.
AugSearch find_augmentations(const DGA& dga, bool graded, std::uint64_t budget = kDefaultBudget);

struct RepSearch {
    std::vector<MatrixRep> reps;
    bool truncated = false;  // budget or result cap hit: absence of reps is not proven
    std::uint64_t nodes = 0;
};

// k <= 8. forced_zero[i] pins generator i to the zero matrix.
RepSearch find_matrix_reps(const std::vector<Poly>& relations, std::size_t ngens, int k,
                           std::uint64_t budget = kDefaultBudget, const std::vector<bool>& forced_zero = {},
                           std::size_t max_results = std::numeric_limits<std::size_t>::max());
RepSearch find_matrix_reps(const DGA& dga, int k, bool graded, std::uint64_t budget = kDefaultBudget,
                           std::size_t max_results = std::numeric_limits<std::size_t>::max());

// Evaluates each relation with plain matrix products; shares no code with the searches.
bool verify_rep(const std::vector<Poly>& relations, const MatrixRep& rho);
// Also checks the graded condition against the DGA gradings.
bool verify_rep(const DGA& dga, const MatrixRep& rho);

BitMatrix kron(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& a);
// A (x) B^T, the matrix of v (x) w -> A v (x) B^T w.
BitMatrix phi_op(const BitMatrix& a, const BitMatrix& b);

enum class GlueSide { first, second, unit };
struct Glue {
    GlueSide side = GlueSide::unit;
    Letter index = 0;
};

// first-side generators act as rho1(c) (x) I, second-side ones as I (x) rho2(c).
MatrixRep tensor_rep(const MatrixRep& rho1, const MatrixRep& rho2, const std::vector<Glue>& glue);

// Generator i goes to rho(images[i]); throws if the result does not kill the source relations.
MatrixRep pullback_rep(const std::vector<Poly>& images, const MatrixRep& rho, const std::vector<Poly>& source_relations);

// Matrix of a polynomial under rho.
BitMatrix evaluate(const Poly& p, const MatrixRep& rho);

// Univariate p in generator a: companion matrix of an irreducible factor of p
// of least degree; every other generator goes to 0.
MatrixRep companion_rep(const Poly& p, Letter a, std::size_t ngens);

// Some relation equals 1 + ab + ba for distinct generators a, b.
bool commutator_obstruction(const std::vector<Poly>& relations);

// GF(2)[t] helpers on bit-packed coefficients (bit i = coefficient of t^i).
std::uint64_t gf2x_mod(std::uint64_t a, std::uint64_t b);
std::uint64_t gf2x_gcd(std::uint64_t a, std::uint64_t b);
int gf2x_degree(std::uint64_t a);
// Coefficients of a univariate polynomial in a; throws if another letter occurs.
std::uint64_t univariate_bits(const Poly& p, Letter a);

}  // namespace lch
