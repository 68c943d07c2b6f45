#pragma once

// Graded free associative algebras over Z/2.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lch/error.hpp"

namespace lch {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

// Degree-lexicographic order: shorter words first, then letter-by-letter
// by generator index.
bool deglex_less(const Word& a, const Word& b);

struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const { return deglex_less(a, b); }
};

// Chord length num/den, times e^{eps_power * epsilon} kept as a tag.
struct Action {
    long long num = 1;
    long long den = 1;
    int eps_power = 0;
    bool operator==(const Action&) const = default;
};

struct Generator {
    std::string name;
    int grading = 0;
    std::optional<Action> action;
};

class Algebra {
public:
    explicit Algebra(int modulus = 0);

    Letter add_generator(std::string name, int grading, std::optional<Action> action = {});

    std::size_t size() const { return gens_.size(); }
    const Generator& gen(std::size_t i) const { return gens_.at(i); }
    const std::vector<Generator>& generators() const { return gens_; }
    std::optional<Letter> find(std::string_view name) const;
    Letter index(std::string_view name) const;

    int modulus() const { return modulus_; }
    int reduce(long long g) const;
    int grading(Letter l) const { return reduce(gens_.at(l).grading); }
    int grading(const Word& w) const;
    bool same_grading(long long a, long long b) const { return reduce(a) == reduce(b); }

private:
    int modulus_;
    std::vector<Generator> gens_;
    std::unordered_map<std::string, Letter> by_name_;
};

// A Z/2 polynomial is a set of words; terms are kept sorted by deglex.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Word> words);

    static Poly zero() { return {}; }
    static Poly one() { return Poly(std::vector<Word>{Word{}}); }
    static Poly gen(Letter l) { return Poly(std::vector<Word>{Word{l}}); }
    static Poly word(Word w) { return Poly(std::vector<Word>{std::move(w)}); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].empty(); }
    const std::vector<Word>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    const Word& lead() const;
    std::size_t degree() const;
    bool contains(const Word& w) const;
    bool has_constant() const { return !terms_.empty() && terms_.front().empty(); }
    // Largest letter index used, or -1.
    int max_letter() const;

    void toggle(const Word& w);

    Poly& operator+=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::vector<Word> terms_;
};

Poly pow(const Poly& p, unsigned n);

// Unital algebra map: letter i goes to images[i].
Poly substitute(const Poly& p, const std::vector<Poly>& images);

// Compose substitutions: (g o f)(i) = substitute(f[i], g).
std::vector<Poly> compose(const std::vector<Poly>& f, const std::vector<Poly>& g);

std::optional<int> homogeneous_degree(const Algebra& alg, const Poly& p);

std::string to_string(const Algebra& alg, const Word& w);
std::string to_string(const Algebra& alg, const Poly& p);

// Text syntax: identifiers, optional '*', '+', '^n', parentheses, literals.
// '-' is accepted and means '+'. Runs of letters such as "yx" are split into
// declared generator names when the split is unique.
Poly parse_poly(const Algebra& alg, std::string_view text);

}  // namespace lch
