#include "lch/spin.hpp"

namespace lch {

SpunShell spun_shell(const DGA& base, int m) {
    if (m < 1) throw Error("spinning needs m >= 1");
    SpunShell sh;
    sh.base = base;
    sh.m = m;
    sh.spun = DGA(base.alg.modulus());
    const auto& gens = base.alg.generators();
    for (const auto& g : gens) sh.s_gen.push_back(sh.spun.add(g.name + "_S", g.grading, {}, g.action));
    for (const auto& g : gens) {
        auto act = g.action;
        if (act) act->eps_power += 1;
        sh.n_gen.push_back(sh.spun.add(g.name + "_N", g.grading + m, {}, act));
    }
    std::vector<Poly> iota;
    for (auto l : sh.s_gen) iota.push_back(Poly::gen(l));
    for (std::size_t i = 0; i < gens.size(); ++i) sh.spun.d[sh.s_gen[i]] = substitute(base.d[i], iota);
    for (const auto& e : base.extra) sh.spun.extra.push_back(substitute(e, iota));
    sh.spun.partial = base.partial;
    return sh;
}

SpunShell minimal_model(const DGA& base, int m) {
    auto sh = spun_shell(base, m);
    sh.n_differential_known = true;
    return sh;
}

SpunShell with_n_differential(const SpunShell& shell, const std::vector<Poly>& dn) {
    if (dn.size() != shell.n_gen.size()) throw Error("need one N-differential per base chord");
    SpunShell sh = shell;
    for (std::size_t i = 0; i < dn.size(); ++i) {
        if (dn[i].max_letter() >= static_cast<int>(sh.spun.size())) throw Error("N-differential uses an unknown generator");
        sh.spun.d[sh.n_gen[i]] = dn[i];
    }
    sh.n_differential_known = true;
    return sh;
}

RetractionPair retraction(const SpunShell& shell) {
    if (!shell.n_differential_known) throw Error("the spun differential on N-chords is unknown");
    RetractionPair r;
    r.iota.source = shell.base;
    r.iota.target = shell.spun;
    for (auto l : shell.s_gen) r.iota.images.push_back(Poly::gen(l));
    r.pi.source = shell.spun;
    r.pi.target = shell.base;
    r.pi.images.assign(shell.spun.size(), Poly::zero());
    for (std::size_t i = 0; i < shell.s_gen.size(); ++i) r.pi.images[shell.s_gen[i]] = Poly::gen(static_cast<Letter>(i));
    return r;
}

std::vector<std::string> verify_retraction(const RetractionPair& r) {
    std::vector<std::string> out;
    for (auto& p : verify_morphism(r.iota)) out.push_back("iota: " + p);
    for (auto& p : verify_morphism(r.pi)) out.push_back("pi: " + p);
    if (!out.empty()) return out;
    auto comp = compose(r.iota.images, r.pi.images);
    const auto& base = r.iota.source;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (!(comp[i] == Poly::gen(static_cast<Letter>(i))))
            out.push_back("pi(iota(" + base.alg.gen(i).name + ")) = " + to_string(base.alg, comp[i]));
    // pi kills Q_N exactly when pi(d q) = 0 for the generators it kills
    const auto& spun = r.pi.source;
    for (std::size_t j = 0; j < spun.size(); ++j) {
        if (!r.pi.images[j].is_zero()) continue;
        auto img = substitute(spun.d[j], r.pi.images);
        if (!img.is_zero())
            out.push_back("d " + spun.alg.gen(j).name + " leaves <Q_N>: pi gives " + to_string(base.alg, img));
    }
    return out;
}

namespace {

Augmentation pull(const std::vector<Poly>& images, const Augmentation& eps, const DGA& source) {
    Augmentation out;
    out.graded = eps.graded;
    for (const auto& p : images) out.values.push_back(eval_scalar(p, eps.values) ? 1 : 0);
    if (!is_augmentation(source, out)) throw Error("transported augmentation fails verification");
    return out;
}

MatrixRep pull(const std::vector<Poly>& images, const MatrixRep& rho, const DGA& source) {
    auto out = pullback_rep(images, rho, source.relations());
    out.graded = rho.graded;
    if (!verify_rep(source, out)) throw Error("transported representation fails verification");
    return out;
}

}  // namespace

Augmentation transfer_up(const RetractionPair& r, const Augmentation& eps) { return pull(r.pi.images, eps, r.pi.source); }
Augmentation transfer_down(const RetractionPair& r, const Augmentation& eps) {
    return pull(r.iota.images, eps, r.iota.source);
}
MatrixRep transfer_up(const RetractionPair& r, const MatrixRep& rho) { return pull(r.pi.images, rho, r.pi.source); }
MatrixRep transfer_down(const RetractionPair& r, const MatrixRep& rho) {
    return pull(r.iota.images, rho, r.iota.source);
}

AcyclicityTransfer transfer_acyclicity(const RetractionPair& r, int degree_bound) {
    AcyclicityTransfer t;
    t.base = contains_unit(complete(r.iota.source.relations(), degree_bound));
    t.spun = contains_unit(complete(r.pi.source.relations(), degree_bound));
    if (t.base != Tri::unknown && t.spun != Tri::unknown) t.consistent = t.base == t.spun;
    return t;
}

std::vector<int> product_betti(const std::vector<int>& sphere_dims) {
    std::vector<int> b{1, 1};
    for (int m : sphere_dims) {
        if (m < 1) throw Error("sphere dimensions must be >= 1");
        std::vector<int> nb(b.size() + static_cast<std::size_t>(m), 0);
        for (std::size_t i = 0; i < b.size(); ++i) {
            nb[i] += b[i];
            nb[i + static_cast<std::size_t>(m)] += b[i];
        }
        b = std::move(nb);
    }
    return b;
}

}  // namespace lch
