#include "lch/reps.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace lch {

MatrixRep to_rep(const Augmentation& eps) {
    MatrixRep r;
    r.k = 1;
    r.graded = eps.graded;
    for (auto v : eps.values) {
        BitMatrix m(1, 1);
        m.set(0, 0, v != 0);
        r.values.push_back(m);
    }
    return r;
}

namespace {

// Generators by descending number of relations they occur in; ties by index.
std::vector<std::size_t> search_order(const std::vector<Poly>& rels, std::size_t ngens) {
    std::vector<std::size_t> count(ngens, 0);
    for (const auto& r : rels) {
        std::vector<bool> used(ngens, false);
        for (const auto& w : r.terms())
            for (Letter l : w)
                if (l < ngens) used[l] = true;
        for (std::size_t g = 0; g < ngens; ++g) count[g] += used[g];
    }
    std::vector<std::size_t> order(ngens);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return count[a] > count[b]; });
    return order;
}

// ready[level] lists the relations whose support is assigned once the first
// level+1 generators of `order` are fixed; constant relations land in `always`.
struct Schedule {
    std::vector<std::vector<std::size_t>> ready;
    std::vector<std::size_t> always;
};

Schedule schedule(const std::vector<Poly>& rels, const std::vector<std::size_t>& order) {
    std::vector<std::size_t> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    Schedule s;
    s.ready.resize(order.size());
    for (std::size_t r = 0; r < rels.size(); ++r) {
        int last = -1;
        for (const auto& w : rels[r].terms())
            for (Letter l : w) {
                if (l >= order.size()) throw Error("relation uses an undeclared generator");
                last = std::max(last, static_cast<int>(pos[l]));
            }
        if (last < 0)
            s.always.push_back(r);
        else
            s.ready[static_cast<std::size_t>(last)].push_back(r);
    }
    return s;
}

}  // namespace

AugSearch find_augmentations(const DGA& dga, bool graded, std::uint64_t budget) {
    const std::size_t n = dga.size();
    if (n > 64) throw Error("augmentation search supports at most 64 generators");
    auto rels = dga.relations();
    AugSearch out;
    // Each relation becomes a list of word masks; a word is 1 iff its mask is assigned 1.
    std::vector<std::vector<std::uint64_t>> masks;
    for (const auto& r : rels) {
        std::vector<std::uint64_t> m;
        for (const auto& w : r.terms()) {
            std::uint64_t b = 0;
            for (Letter l : w) b |= std::uint64_t{1} << l;
            m.push_back(b);
        }
        masks.push_back(std::move(m));
    }
    auto order = search_order(rels, n);
    auto sched = schedule(rels, order);
    auto holds = [&](std::size_t r, std::uint64_t ones) {
        unsigned parity = 0;
        for (auto m : masks[r]) parity ^= (m & ~ones) == 0;
        return parity == 0;
    };
    for (auto r : sched.always)
        if (!holds(r, 0)) return out;
    std::vector<bool> pinned(n, false);
    if (graded)
        for (std::size_t g = 0; g < n; ++g) pinned[g] = dga.alg.grading(static_cast<Letter>(g)) != 0;

    std::uint64_t ones = 0;
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (out.truncated) return;
        if (level == n) {
            Augmentation a;
            a.graded = graded;
            a.values.resize(n);
            for (std::size_t g = 0; g < n; ++g) a.values[g] = (ones >> g) & 1u;
            out.augs.push_back(std::move(a));
            return;
        }
        std::size_t g = order[level];
        for (int v = 0; v < (pinned[g] ? 1 : 2); ++v) {
            if (++out.nodes > budget) {
                out.truncated = true;
                return;
            }
            if (v)
                ones |= std::uint64_t{1} << g;
            else
                ones &= ~(std::uint64_t{1} << g);
            bool ok = true;
            for (auto r : sched.ready[level])
                if (!holds(r, ones)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, level + 1);
        }
        ones &= ~(std::uint64_t{1} << g);
    };
    rec(rec, 0);
    std::sort(out.augs.begin(), out.augs.end());
    return out;
}

namespace {

// k x k matrices (k <= 8) packed row-major, one byte per row.
using Packed = std::uint64_t;

Packed packed_identity(int k) {
    Packed m = 0;
    for (int i = 0; i < k; ++i) m |= Packed{1} << (8 * i + i);
    return m;
}

Packed packed_mul(Packed a, Packed b, int k) {
    Packed c = 0;
    for (int i = 0; i < k; ++i) {
        unsigned row = (a >> (8 * i)) & 0xffu;
        Packed acc = 0;
        while (row) {
            int j = std::countr_zero(row);
            acc ^= (b >> (8 * j)) & 0xffu;
            row &= row - 1;
        }
        c |= acc << (8 * i);
    }
    return c;
}

// Enumerate the 2^(k*k) matrices as packed values.
Packed packed_from_index(std::uint64_t idx, int k) {
    Packed m = 0;
    for (int i = 0; i < k; ++i) m |= ((idx >> (k * i)) & ((1u << k) - 1)) << (8 * i);
    return m;
}

BitMatrix unpack(Packed m, int k) {
    BitMatrix out(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if ((m >> (8 * i + j)) & 1u) out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), true);
    return out;
}

}  // namespace

RepSearch find_matrix_reps(const std::vector<Poly>& relations, std::size_t ngens, int k, std::uint64_t budget,
                           const std::vector<bool>& forced_zero, std::size_t max_results) {
    if (k < 1 || k > 8) throw Error("find_matrix_reps: k must be in 1..8");
    std::vector<Poly> rels;
    for (const auto& r : relations)
        if (!r.is_zero()) rels.push_back(r);
    RepSearch out;
    auto order = search_order(rels, ngens);
    auto sched = schedule(rels, order);
    const Packed id = packed_identity(k);
    std::vector<Packed> val(ngens, 0);
    auto holds = [&](std::size_t r) {
        Packed acc = 0;
        for (const auto& w : rels[r].terms()) {
            Packed t = id;
            for (Letter l : w) t = packed_mul(t, val[l], k);
            acc ^= t;
        }
        return acc == 0;
    };
    for (auto r : sched.always)
        if (!holds(r)) return out;
    const std::uint64_t choices = k * k >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << (k * k);
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (out.truncated) return;
        if (level == ngens) {
            MatrixRep m;
            m.k = k;
            m.graded = !forced_zero.empty();
            for (auto v : val) m.values.push_back(unpack(v, k));
            out.reps.push_back(std::move(m));
            if (out.reps.size() >= max_results) out.truncated = true;
            return;
        }
        std::size_t g = order[level];
        bool pinned = g < forced_zero.size() && forced_zero[g];
        for (std::uint64_t idx = 0; idx < (pinned ? 1 : choices); ++idx) {
            if (++out.nodes > budget) {
                out.truncated = true;
                return;
            }
            val[g] = packed_from_index(idx, k);
            bool ok = true;
            for (auto r : sched.ready[level])
                if (!holds(r)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, level + 1);
            if (out.truncated) return;
        }
        val[g] = 0;
    };
    rec(rec, 0);
    return out;
}

RepSearch find_matrix_reps(const DGA& dga, int k, bool graded, std::uint64_t budget, std::size_t max_results) {
    std::vector<bool> pinned;
    if (graded) {
        pinned.resize(dga.size());
        for (std::size_t g = 0; g < dga.size(); ++g) pinned[g] = dga.alg.grading(static_cast<Letter>(g)) != 0;
    }
    auto res = find_matrix_reps(dga.relations(), dga.size(), k, budget, pinned, max_results);
    for (auto& r : res.reps) r.graded = graded;
    return res;
}

BitMatrix evaluate(const Poly& p, const MatrixRep& rho) {
    const auto k = static_cast<std::size_t>(rho.k);
    BitMatrix acc(k, k);
    for (const auto& w : p.terms()) {
        BitMatrix t = BitMatrix::identity(k);
        for (Letter l : w) {
            if (l >= rho.values.size()) throw Error("representation: unassigned generator " + std::to_string(l));
            t = t * rho.values[l];
        }
        acc = acc + t;
    }
    return acc;
}

bool verify_rep(const std::vector<Poly>& relations, const MatrixRep& rho) {
    for (const auto& m : rho.values)
        if (m.rows() != static_cast<std::size_t>(rho.k) || m.cols() != static_cast<std::size_t>(rho.k)) return false;
    for (const auto& r : relations)
        if (!evaluate(r, rho).is_zero()) return false;
    return true;
}

bool verify_rep(const DGA& dga, const MatrixRep& rho) {
    if (rho.values.size() != dga.size()) throw Error("representation: generator count mismatch");
    if (rho.graded)
        for (std::size_t g = 0; g < dga.size(); ++g)
            if (dga.alg.grading(static_cast<Letter>(g)) != 0 && !rho.values[g].is_zero()) return false;
    return verify_rep(dga.relations(), rho);
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j)) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (b.get(p, q)) out.set(i * b.rows() + p, j * b.cols() + q, true);
        }
    return out;
}

BitMatrix transpose(const BitMatrix& a) {
    BitMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) out.set(j, i, true);
    return out;
}

BitMatrix phi_op(const BitMatrix& a, const BitMatrix& b) { return kron(a, transpose(b)); }

MatrixRep tensor_rep(const MatrixRep& rho1, const MatrixRep& rho2, const std::vector<Glue>& glue) {
    const auto k1 = static_cast<std::size_t>(rho1.k), k2 = static_cast<std::size_t>(rho2.k);
    MatrixRep out;
    out.k = rho1.k * rho2.k;
    out.graded = rho1.graded && rho2.graded;
    for (const auto& g : glue) {
        switch (g.side) {
            case GlueSide::first:
                if (g.index >= rho1.values.size()) throw Error("tensor_rep: glue refers to a missing generator");
                out.values.push_back(kron(rho1.values[g.index], BitMatrix::identity(k2)));
                break;
            case GlueSide::second:
                if (g.index >= rho2.values.size()) throw Error("tensor_rep: glue refers to a missing generator");
                out.values.push_back(kron(BitMatrix::identity(k1), rho2.values[g.index]));
                break;
            case GlueSide::unit:
                out.values.push_back(BitMatrix::identity(k1 * k2));
                break;
        }
    }
    return out;
}

MatrixRep pullback_rep(const std::vector<Poly>& images, const MatrixRep& rho, const std::vector<Poly>& source_relations) {
    MatrixRep out;
    out.k = rho.k;
    out.graded = false;
    for (const auto& img : images) out.values.push_back(evaluate(img, rho));
    if (!verify_rep(source_relations, out)) throw Error("pullback_rep: pulled-back matrices do not kill the source relations");
    return out;
}

int gf2x_degree(std::uint64_t a) { return a ? 63 - std::countl_zero(a) : -1; }

std::uint64_t gf2x_mod(std::uint64_t a, std::uint64_t b) {
    if (!b) throw Error("gf2x_mod: division by zero");
    int db = gf2x_degree(b);
    for (int da = gf2x_degree(a); da >= db; da = gf2x_degree(a)) a ^= b << (da - db);
    return a;
}

std::uint64_t gf2x_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a = gf2x_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

std::uint64_t univariate_bits(const Poly& p, Letter a) {
    std::uint64_t bits = 0;
    for (const auto& w : p.terms()) {
        if (w.size() > 63) throw Error("univariate polynomial of degree > 63");
        for (Letter l : w)
            if (l != a) throw Error("polynomial is not univariate in the chosen generator");
        bits ^= std::uint64_t{1} << w.size();
    }
    return bits;
}

MatrixRep companion_rep(const Poly& p, Letter a, std::size_t ngens) {
    if (a >= ngens) throw Error("companion_rep: generator out of range");
    std::uint64_t bits = univariate_bits(p, a);
    if (bits == 1) throw Error("companion_rep: p = 1 is a unit, no representation exists");
    std::uint64_t f = 0;
    if (bits == 0 || (bits & 1u) == 0) {
        f = 0b10;  // p(0) = 0, factor t
    } else {
        int dp = gf2x_degree(bits);
        for (int d = 1; d <= dp && !f; ++d) {
            if (2 * d > dp) {
                f = bits;
                break;
            }
            std::uint64_t top = std::uint64_t{1} << d;
            for (std::uint64_t low = 1; low < top; low += 2)
                if (gf2x_mod(bits, top | low) == 0) {
                    f = top | low;
                    break;
                }
        }
    }
    const int d = gf2x_degree(f);
    MatrixRep out;
    out.k = d;
    const auto kd = static_cast<std::size_t>(d);
    BitMatrix c(kd, kd);
    for (std::size_t i = 0; i + 1 < kd; ++i) c.set(i + 1, i, true);
    for (std::size_t i = 0; i < kd; ++i)
        if ((f >> i) & 1u) c.set(i, kd - 1, true);
    for (std::size_t g = 0; g < ngens; ++g) out.values.push_back(g == a ? c : BitMatrix(kd, kd));
    return out;
}

bool commutator_obstruction(const std::vector<Poly>& relations) {
    for (const auto& r : relations) {
        if (r.size() != 3 || !r.has_constant()) continue;
        const auto& t1 = r.terms()[1];
        const auto& t2 = r.terms()[2];
        if (t1.size() == 2 && t2.size() == 2 && t1[0] != t1[1] && t1[0] == t2[1] && t1[1] == t2[0]) return true;
    }
    return false;
}

}  // namespace lch
