#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lch/freealg.hpp"
#include "lch/gf2.hpp"

namespace lch {

struct DGA {
    Algebra alg;
    std::vector<Poly> d;
    // Relations known to hold in the quotient without a recorded differential.
    // Only partial fixtures use these.
    std::vector<Poly> extra;
    bool partial = false;

    DGA() = default;
    explicit DGA(int modulus) : alg(modulus) {}

    Letter add(std::string name, int grading, Poly boundary = {}, std::optional<Action> action = {});
    std::size_t size() const { return alg.size(); }
    Letter index(std::string_view name) const { return alg.index(name); }

    // Leibniz extension of d to arbitrary polynomials.
    Poly boundary(const Poly& p) const;
    // The generators {d c} of the ideal, zeros dropped, plus extra relations.
    std::vector<Poly> relations() const;
};

std::vector<std::string> check_dga(const DGA& dga);

// Free product with e, f where d e = f, |f| = grading - 1.
DGA stabilize(const DGA& dga, int grading);

struct Augmentation {
    std::vector<std::uint8_t> values;
    bool graded = false;
    friend bool operator==(const Augmentation&, const Augmentation&) = default;
    friend auto operator<=>(const Augmentation&, const Augmentation&) = default;
};

// Evaluate a polynomial at scalar values (product of bits per word).
bool eval_scalar(const Poly& p, const std::vector<std::uint8_t>& values);
bool is_augmentation(const DGA& dga, const Augmentation& eps);

struct LinearComplex {
    std::vector<std::string> names;
    std::vector<int> gradings;
    int modulus = 0;
    // boundary.get(i, j): coefficient of basis element i in the boundary of j.
    BitMatrix boundary;
};

LinearComplex linearize(const DGA& dga, const Augmentation& eps);
std::map<int, int> homology(const LinearComplex& c);
int euler_characteristic(const std::map<int, int>& dims);
int euler_characteristic(const LinearComplex& c);

struct DGAMorphism {
    DGA source;
    DGA target;
    std::vector<Poly> images;
};

std::vector<std::string> verify_morphism(const DGAMorphism& f);

// Text format: "modulus N", "gen NAME GRADING [NUM/DEN [EPS]]", "d NAME = POLY",
// "rel POLY", "partial". '#' starts a comment.
DGA parse_dga(std::string_view text);
DGA load_dga(const std::string& path);
std::string format_dga(const DGA& dga);

}  // namespace lch
