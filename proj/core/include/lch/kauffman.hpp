#pragma once

// Two-variable Kauffman polynomial (Dubrovnik form) of knot diagrams in PD
// notation, and the tb bound it gives.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lch/error.hpp"

namespace lch {

class LaurentPoly2 {
public:
    using Key = std::pair<int, int>;  // (a exponent, z exponent)

    LaurentPoly2() = default;
    static LaurentPoly2 constant(long long c);
    static LaurentPoly2 monomial(long long c, int a_exp, int z_exp);

    const std::map<Key, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff(int a_exp, int z_exp) const;

    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

private:
    void add(Key k, long long c);
    std::map<Key, long long> terms_;
};

LaurentPoly2 pow(const LaurentPoly2& p, int n);  // n may be negative only for monomials
LaurentPoly2 invert_a(const LaurentPoly2& p);      // a -> a^{-1}
std::string to_string(const LaurentPoly2& p);

int min_deg_a(const LaurentPoly2& f);

// Crossing X[i, j, k, l]: i is the incoming under edge, the others follow
// counterclockwise. Edges are numbered 1..2n along the orientation.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
};

inline constexpr std::size_t kKauffmanCrossingCap = 14;

// +1 when the over strand leaves through the slot counterclockwise after the under-in slot.
int crossing_sign(const PDCode& pd, std::size_t i);
int writhe(const PDCode& pd);
void validate(const PDCode& pd);

// Braid generators: +i is sigma_i, -i its inverse; strands are numbered 1..s.
PDCode pd_from_braid(const std::vector<int>& word, int strands);
PDCode pd_mirror(const PDCode& pd);
PDCode pd_connected_sum(const PDCode& a, const PDCode& b);

// Unnormalized regular-isotopy invariant: unknot with no crossings is 1,
// D(L+) - D(L-) = z (D(L0) - D(Linf)), a positive curl multiplies by a.
LaurentPoly2 dubrovnik(const PDCode& pd);
// Writhe-normalized Dubrovnik polynomial of a knot to Kauffman's F: F(a, z) = F_D(-ia, iz).
LaurentPoly2 dubrovnik_to_kauffman(const LaurentPoly2& fd);
// The Kauffman F of a^{-w} D, then a -> a^{-1}: the convention under
// which tb <= min_deg_a F - 1 (right-handed trefoil: min degree 2).
// F(unknot) = 1 and the mirror image has F(a^{-1}, z).
LaurentPoly2 kauffman_poly(const PDCode& pd);

enum class BoundVerdict { violated, strict, equality };
struct KauffmanBound {
    BoundVerdict verdict = BoundVerdict::strict;
    int tb = 0;
    int bound = 0;  // min_deg_a F - 1
    std::string interpretation;
};

KauffmanBound kauffman_bound(int tb, const LaurentPoly2& f);
std::string to_string(BoundVerdict v);

// Text format: one "X a b c d" per line, '#' comments.
PDCode parse_pd(std::string_view text);
PDCode load_pd(const std::string& path);
std::string format_pd(const PDCode& pd);

}  // namespace lch
