#include "lch/dga.hpp"

#include <numeric>

namespace lch {

Letter DGA::add(std::string name, int grading, Poly bd, std::optional<Action> action) {
    Letter l = alg.add_generator(std::move(name), grading, action);
    d.push_back(std::move(bd));
    return l;
}

Poly DGA::boundary(const Poly& p) const {
    std::vector<Word> out;
    for (const auto& w : p.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Poly& dl = d.at(w[i]);
            for (const auto& t : dl.terms()) {
                Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                v.insert(v.end(), t.begin(), t.end());
                v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
                out.push_back(std::move(v));
            }
        }
    }
    return Poly(std::move(out));
}

std::vector<Poly> DGA::relations() const {
    std::vector<Poly> r;
    for (const auto& p : d)
        if (!p.is_zero()) r.push_back(p);
    for (const auto& p : extra)
        if (!p.is_zero()) r.push_back(p);
    return r;
}

std::vector<std::string> check_dga(const DGA& dga) {
    std::vector<std::string> bad;
    if (dga.d.size() != dga.alg.size()) bad.push_back("differential table size differs from generator count");
    for (std::size_t i = 0; i < dga.d.size(); ++i) {
        const auto& name = dga.alg.gen(i).name;
        if (dga.d[i].max_letter() >= static_cast<int>(dga.alg.size())) {
            bad.push_back("d " + name + " uses an undeclared generator");
            continue;
        }
        Poly dd = dga.boundary(dga.d[i]);
        if (!dd.is_zero()) bad.push_back("d^2 " + name + " = " + to_string(dga.alg, dd));
        if (dga.d[i].is_zero()) continue;
        long long want = static_cast<long long>(dga.alg.gen(i).grading) - 1;
        for (const auto& w : dga.d[i].terms()) {
            if (!dga.alg.same_grading(dga.alg.grading(w), want)) {
                bad.push_back("term " + to_string(dga.alg, w) + " of d " + name + " has grading " +
                              std::to_string(dga.alg.grading(w)) + ", expected " +
                              std::to_string(dga.alg.reduce(want)));
            }
        }
    }
    return bad;
}

namespace {

std::string fresh_name(const Algebra& alg, const std::string& base) {
    if (!alg.find(base)) return base;
    for (int i = 1;; ++i) {
        std::string s = base + std::to_string(i);
        if (!alg.find(s)) return s;
    }
}

}  // namespace

DGA stabilize(const DGA& dga, int grading) {
    DGA out = dga;
    std::string e = fresh_name(out.alg, "e");
    std::string f = fresh_name(out.alg, "f");
    if (e == f) f = fresh_name(out.alg, f + "_");
    Letter le = out.add(e, grading);
    Letter lf = out.add(f, grading - 1);
    out.d[le] = Poly::gen(lf);
    return out;
}

bool eval_scalar(const Poly& p, const std::vector<std::uint8_t>& values) {
    bool acc = false;
    for (const auto& w : p.terms()) {
        bool t = true;
        for (Letter l : w) {
            if (!values.at(l)) {
                t = false;
                break;
            }
        }
        acc ^= t;
    }
    return acc;
}

bool is_augmentation(const DGA& dga, const Augmentation& eps) {
    if (eps.values.size() != dga.size()) return false;
    for (std::size_t i = 0; i < dga.size(); ++i) {
        if (eps.values[i] > 1) return false;
        if (eps.graded && eps.values[i] && dga.alg.grading(static_cast<Letter>(i)) != 0) return false;
    }
    for (const auto& r : dga.relations())
        if (eval_scalar(r, eps.values)) return false;
    return true;
}

LinearComplex linearize(const DGA& dga, const Augmentation& eps) {
    if (!is_augmentation(dga, eps)) throw Error("linearize: not an augmentation");
    const std::size_t n = dga.size();
    std::vector<Poly> sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
        sigma[i] = Poly::gen(static_cast<Letter>(i));
        if (eps.values[i]) sigma[i] += Poly::one();
    }
    LinearComplex c;
    c.modulus = dga.alg.modulus();
    c.boundary = BitMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        c.names.push_back(dga.alg.gen(j).name);
        c.gradings.push_back(dga.alg.grading(static_cast<Letter>(j)));
        // sigma is an involution, so conjugation is substitution on both sides;
        // d(sigma(c)) = d(c) because d kills constants.
        Poly conj = substitute(dga.d[j], sigma);
        for (const auto& w : conj.terms())
            if (w.size() == 1) c.boundary.set(w[0], j, true);
    }
    return c;
}

std::map<int, int> homology(const LinearComplex& c) {
    std::map<int, std::vector<std::size_t>> by_deg;
    for (std::size_t i = 0; i < c.gradings.size(); ++i) by_deg[c.gradings[i]].push_back(i);
    auto reduce = [&](long long g) {
        if (c.modulus == 0) return static_cast<int>(g);
        long long r = g % c.modulus;
        return static_cast<int>(r < 0 ? r + c.modulus : r);
    };
    auto block_rank = [&](int from) -> std::size_t {
        auto src = by_deg.find(from);
        auto dst = by_deg.find(reduce(static_cast<long long>(from) - 1));
        if (src == by_deg.end() || dst == by_deg.end()) return 0;
        return c.boundary.sub(dst->second, src->second).rank();
    };
    std::map<int, int> out;
    for (const auto& [g, idx] : by_deg) {
        std::size_t ker = idx.size() - block_rank(g);
        std::size_t im = block_rank(reduce(static_cast<long long>(g) + 1));
        out[g] = static_cast<int>(ker - im);
    }
    return out;
}

int euler_characteristic(const std::map<int, int>& dims) {
    int chi = 0;
    for (const auto& [g, n] : dims) chi += (g % 2 == 0) ? n : -n;
    return chi;
}

int euler_characteristic(const LinearComplex& c) {
    int chi = 0;
    for (int g : c.gradings) chi += (g % 2 == 0) ? 1 : -1;
    return chi;
}

std::vector<std::string> verify_morphism(const DGAMorphism& f) {
    std::vector<std::string> bad;
    const auto& src = f.source;
    const auto& tgt = f.target;
    if (f.images.size() != src.size()) {
        bad.push_back("image table size differs from source generator count");
        return bad;
    }
    int sm = src.alg.modulus(), tm = tgt.alg.modulus();
    bool divides = (tm == 0) ? sm == 0 : sm % tm == 0;
    if (!divides) bad.push_back("target modulus " + std::to_string(tm) + " does not divide source modulus " + std::to_string(sm));
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (f.images[i].max_letter() >= static_cast<int>(tgt.size())) {
            bad.push_back("image of " + src.alg.gen(i).name + " uses an undeclared generator");
            return bad;
        }
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        const auto& name = src.alg.gen(i).name;
        const auto& img = f.images[i];
        if (divides) {
            for (const auto& w : img.terms()) {
                if (!tgt.alg.same_grading(tgt.alg.grading(w), src.alg.gen(i).grading)) {
                    bad.push_back("image of " + name + " is not of grading " + std::to_string(src.alg.gen(i).grading));
                    break;
                }
            }
        }
        Poly lhs = substitute(src.d[i], f.images);
        Poly rhs = tgt.boundary(img);
        if (lhs != rhs)
            bad.push_back("chain map fails on " + name + ": f(d " + name + ") = " + to_string(tgt.alg, lhs) +
                          ", d f(" + name + ") = " + to_string(tgt.alg, rhs));
    }
    return bad;
}

}  // namespace lch
