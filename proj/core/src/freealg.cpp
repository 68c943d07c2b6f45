#include "lch/freealg.hpp"

#include <algorithm>
#include <iterator>

namespace lch {

bool deglex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Algebra::Algebra(int modulus) : modulus_(modulus) {
    if (modulus < 0) throw Error("grading modulus must be non-negative");
}

Letter Algebra::add_generator(std::string name, int grading, std::optional<Action> action) {
    if (name.empty()) throw Error("empty generator name");
    if (by_name_.count(name)) throw Error("duplicate generator '" + name + "'");
    if (action && (action->den <= 0 || action->num <= 0))
        throw Error("action of '" + name + "' must be positive");
    if (gens_.size() >= 0xffff) throw Error("too many generators");
    auto l = static_cast<Letter>(gens_.size());
    by_name_.emplace(name, l);
    gens_.push_back({std::move(name), grading, action});
    return l;
}

std::optional<Letter> Algebra::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

Letter Algebra::index(std::string_view name) const {
    auto l = find(name);
    if (!l) throw Error("unknown generator '" + std::string(name) + "'");
    return *l;
}

int Algebra::reduce(long long g) const {
    if (modulus_ == 0) return static_cast<int>(g);
    long long r = g % modulus_;
    if (r < 0) r += modulus_;
    return static_cast<int>(r);
}

int Algebra::grading(const Word& w) const {
    long long s = 0;
    for (Letter l : w) s += gens_.at(l).grading;
    return reduce(s);
}

namespace {

// Sort and drop words that occur an even number of times.
std::vector<Word> cancel_pairs(std::vector<Word> v) {
    std::sort(v.begin(), v.end(), DeglexLess{});
    std::vector<Word> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i + 1;
        while (j < v.size() && v[j] == v[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(std::move(v[i]));
        i = j;
    }
    return out;
}

}  // namespace

Poly::Poly(std::vector<Word> words) : terms_(cancel_pairs(std::move(words))) {}

const Word& Poly::lead() const {
    if (terms_.empty()) throw Error("leading word of the zero polynomial");
    return terms_.back();
}

std::size_t Poly::degree() const { return terms_.empty() ? 0 : terms_.back().size(); }

bool Poly::contains(const Word& w) const {
    return std::binary_search(terms_.begin(), terms_.end(), w, DeglexLess{});
}

int Poly::max_letter() const {
    int m = -1;
    for (const auto& w : terms_)
        for (Letter l : w) m = std::max(m, static_cast<int>(l));
    return m;
}

void Poly::toggle(const Word& w) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w, DeglexLess{});
    if (it != terms_.end() && *it == w)
        terms_.erase(it);
    else
        terms_.insert(it, w);
}

Poly& Poly::operator+=(const Poly& o) {
    std::vector<Word> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                  std::back_inserter(out), DeglexLess{});
    terms_ = std::move(out);
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    r += b;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    std::vector<Word> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& u : a.terms_)
        for (const auto& v : b.terms_) {
            Word w;
            w.reserve(u.size() + v.size());
            w.insert(w.end(), u.begin(), u.end());
            w.insert(w.end(), v.begin(), v.end());
            prod.push_back(std::move(w));
        }
    return Poly(std::move(prod));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly pow(const Poly& p, unsigned n) {
    Poly r = Poly::one();
    for (unsigned i = 0; i < n; ++i) r *= p;
    return r;
}

Poly substitute(const Poly& p, const std::vector<Poly>& images) {
    Poly out;
    for (const auto& w : p.terms()) {
        Poly t = Poly::one();
        for (Letter l : w) {
            if (l >= images.size()) throw Error("substitute: no image for generator " + std::to_string(l));
            t *= images[l];
            if (t.is_zero()) break;
        }
        out += t;
    }
    return out;
}

std::vector<Poly> compose(const std::vector<Poly>& f, const std::vector<Poly>& g) {
    std::vector<Poly> out;
    out.reserve(f.size());
    for (const auto& p : f) out.push_back(substitute(p, g));
    return out;
}

std::optional<int> homogeneous_degree(const Algebra& alg, const Poly& p) {
    if (p.is_zero()) return std::nullopt;
    int d = alg.grading(p.terms().front());
    for (const auto& w : p.terms())
        if (alg.grading(w) != d) return std::nullopt;
    return d;
}

std::string to_string(const Algebra& alg, const Word& w) {
    if (w.empty()) return "1";
    bool short_names = std::all_of(w.begin(), w.end(), [&](Letter l) { return alg.gen(l).name.size() == 1; });
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && !short_names) s += '*';
        s += alg.gen(w[i]).name;
    }
    return s;
}

std::string to_string(const Algebra& alg, const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
        if (i) s += " + ";
        s += to_string(alg, p.terms()[i]);
    }
    return s;
}

}  // namespace lch
