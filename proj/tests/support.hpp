#pragma once

// Shared test helpers: fixture paths, random generators and evaluators that
// do not go through the library's own evaluation code.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lch/dga.hpp"
#include "lch/freealg.hpp"
#include "lch/reps.hpp"

namespace lcht {

inline std::string fixture(const std::string& name) { return std::string(LCH_FIXTURE_DIR) + "/" + name; }

using Rng = std::mt19937_64;

inline lch::Poly random_poly(Rng& rng, std::size_t ngens, std::size_t max_deg, std::size_t max_terms) {
    std::uniform_int_distribution<std::size_t> nt(0, max_terms), len(0, max_deg), let(0, ngens - 1);
    std::vector<lch::Word> words;
    for (std::size_t t = nt(rng); t > 0; --t) {
        lch::Word w(len(rng));
        for (auto& l : w) l = static_cast<lch::Letter>(let(rng));
        words.push_back(std::move(w));
    }
    return lch::Poly(std::move(words));
}

// Ungraded (modulus 1) DGA with d^2 = 0 by construction: each new generator
// gets d = d(P) + C where P uses earlier generators and C only cycles.
inline lch::DGA random_dga(Rng& rng, std::size_t ngens, std::size_t max_deg = 3) {
    lch::DGA d(1);
    std::vector<lch::Letter> cycles;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < ngens; ++i) {
        lch::Poly dg;
        if (i > 0 && coin(rng)) {
            auto p = random_poly(rng, i, max_deg, 3);
            dg = d.boundary(p);
            if (!cycles.empty()) {
                auto c = random_poly(rng, cycles.size(), max_deg, 2);
                std::vector<lch::Poly> img;
                for (auto l : cycles) img.push_back(lch::Poly::gen(l));
                dg += lch::substitute(c, img);
            }
        }
        auto l = d.add("g" + std::to_string(i), 0, dg);
        if (dg.is_zero()) cycles.push_back(l);
    }
    return d;
}

// Word-by-word evaluation at scalars.
inline int eval_bits(const lch::Poly& p, const std::vector<std::uint8_t>& v) {
    int s = 0;
    for (const auto& w : p.terms()) {
        int t = 1;
        for (auto l : w) t &= v[l];
        s ^= t;
    }
    return s;
}

inline std::size_t brute_aug_count(const lch::DGA& d, bool graded) {
    const std::size_t n = d.size();
    auto rels = d.relations();
    std::size_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        std::vector<std::uint8_t> v(n);
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = (m >> i) & 1;
            if (graded && v[i] && d.alg.grading(static_cast<lch::Letter>(i)) != 0) ok = false;
        }
        for (const auto& r : rels) ok = ok && eval_bits(r, v) == 0;
        count += ok;
    }
    return count;
}

// Plain integer matrices mod 2.
using IMat = std::vector<std::vector<int>>;

inline IMat imat(const lch::BitMatrix& m) {
    IMat out(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
    return out;
}

inline IMat imul(const IMat& a, const IMat& b) {
    IMat out(a.size(), std::vector<int>(b.empty() ? 0 : b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] ^= b[k][j];
    return out;
}

inline bool rep_kills(const std::vector<lch::Poly>& rels, const lch::MatrixRep& rho) {
    const std::size_t k = static_cast<std::size_t>(rho.k);
    std::vector<IMat> vals;
    for (const auto& m : rho.values) vals.push_back(imat(m));
    for (const auto& r : rels) {
        IMat sum(k, std::vector<int>(k));
        for (const auto& w : r.terms()) {
            IMat t(k, std::vector<int>(k));
            for (std::size_t i = 0; i < k; ++i) t[i][i] = 1;
            for (auto l : w) t = imul(t, vals[l]);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sum[i][j] ^= t[i][j];
        }
        for (const auto& row : sum)
            for (int x : row)
                if (x) return false;
    }
    return true;
}

}  // namespace lcht
