// lch: command-line front end for lchkit.
//
// Exit codes: 0 verified, 1 violated or failed, 2 inconclusive (budget or
// degree bound hit). Input errors also exit 1 with a message on stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <sstream>

#include "lch/bounds.hpp"
#include "lch/charalg.hpp"
#include "lch/diagram.hpp"
#include "lch/kauffman.hpp"
#include "lch/payload_io.hpp"
#include "lch/pipeline.hpp"
#include "lch/reps.hpp"
#include "lch/spin.hpp"
#include "lch/text.hpp"

using nlohmann::json;
using namespace lch;

namespace {

struct Globals {
    std::uint64_t budget = kDefaultBudget;
    int bound = kDefaultBound;
    std::uint64_t seed = 1;
    std::string format = "text";
    bool as_json() const { return format == "json"; }
};

Globals g;
int exit_code = 0;

void emit(const json& j, const std::string& text) {
    if (g.as_json())
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

std::string matrix_text(const BitMatrix& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += r ? "/" : "";
        for (std::size_t c = 0; c < m.cols(); ++c) s += m.get(r, c) ? '1' : '0';
    }
    return s;
}

std::string aug_text(const Algebra& alg, const Augmentation& e) {
    std::string s;
    for (std::size_t i = 0; i < e.values.size(); ++i)
        if (e.values[i]) s += (s.empty() ? "" : " ") + alg.gen(i).name;
    return s.empty() ? "(all zero)" : s;
}

// ---- charalg

void add_charalg(CLI::App& app) {
    auto* grp = app.add_subcommand("charalg", "characteristic algebra by rewriting");
    grp->require_subcommand(1);

    auto* comp = grp->add_subcommand("complete", "complete the relations of a DGA");
    static std::string file;
    comp->add_option("file", file, "DGA file")->required();
    comp->callback([] {
        auto d = load_dga(file);
        auto rs = complete(d.relations(), g.bound);
        json j{{"complete_up_to_bound", rs.complete_up_to_bound}, {"degree_bound", rs.degree_bound}, {"unit", rs.unit}};
        std::ostringstream os;
        j["rules"] = json::array();
        for (const auto& r : rs.rules) {
            auto lhs = to_string(d.alg, r.lead), rhs = to_string(d.alg, r.rest);
            j["rules"].push_back({{"lead", lhs}, {"rest", rhs}, {"height", r.height}});
            os << lhs << " -> " << rhs << '\n';
        }
        os << (rs.complete_up_to_bound ? "complete" : "truncated") << " at bound " << rs.degree_bound << '\n';
        emit(j, os.str());
        exit_code = rs.complete_up_to_bound ? 0 : 2;
    });

    auto* nf = grp->add_subcommand("nf", "normal form of a polynomial");
    static std::string nf_file, poly;
    nf->add_option("--poly", poly, "polynomial")->required();
    nf->add_option("file", nf_file, "DGA file")->required();
    nf->callback([] {
        auto d = load_dga(nf_file);
        auto rs = complete(d.relations(), g.bound);
        int h = 0;
        auto r = normal_form(rs, parse_poly(d.alg, poly), &h);
        auto s = to_string(d.alg, r);
        emit({{"normal_form", s}, {"complete_up_to_bound", rs.complete_up_to_bound}, {"height", h}}, s + '\n');
        exit_code = rs.complete_up_to_bound ? 0 : 2;
    });

    auto* unit = grp->add_subcommand("unit", "is 1 in the ideal");
    static std::string unit_file;
    unit->add_option("file", unit_file, "DGA file")->required();
    unit->callback([] {
        auto d = load_dga(unit_file);
        auto t = contains_unit(complete(d.relations(), g.bound));
        emit({{"contains_unit", to_string(t)}}, to_string(t) + '\n');
        exit_code = t == Tri::unknown ? 2 : 0;
    });

    auto* wit = grp->add_subcommand("witness", "verify a rank witness AB = I_m");
    static std::string wfile;
    wit->add_option("--file", wfile, "witness JSON")->required();
    wit->callback([] {
        auto w = witness_from_json(read_file(wfile));
        auto rs = complete(w.relations, g.bound);
        bool ok = verify_rank_witness(rs, w.witness);
        emit({{"verified", ok}, {"m", w.witness.m}, {"n", w.witness.n}, {"complete_up_to_bound", rs.complete_up_to_bound}},
             std::string(ok ? "verified" : "not verified") + ": AB = I_" + std::to_string(w.witness.m) + '\n');
        exit_code = ok ? 0 : rs.complete_up_to_bound ? 1 : 2;
    });
}

// ---- reps

void add_reps(CLI::App& app) {
    auto* grp = app.add_subcommand("reps", "augmentations and matrix representations");
    grp->require_subcommand(1);

    auto* aug = grp->add_subcommand("aug", "enumerate augmentations to Z/2");
    static std::string aug_file;
    static bool graded = false;
    aug->add_option("file", aug_file, "DGA file")->required();
    aug->add_flag("--graded", graded, "graded augmentations only");
    aug->callback([] {
        auto d = load_dga(aug_file);
        auto s = find_augmentations(d, graded, g.budget);
        json j{{"count", s.augs.size()}, {"truncated", s.truncated}, {"augmentations", json::array()}};
        std::ostringstream os;
        for (const auto& e : s.augs) {
            j["augmentations"].push_back(json::parse(aug_to_json(d.alg, e)));
            os << aug_text(d.alg, e) << '\n';
        }
        os << s.augs.size() << (graded ? " graded" : "") << " augmentation(s)" << (s.truncated ? ", truncated" : "") << '\n';
        emit(j, os.str());
        exit_code = s.truncated ? 2 : 0;
    });

    auto* find = grp->add_subcommand("find", "search k-dimensional representations");
    static std::string find_file;
    static int k = 2;
    static std::size_t max_results = 10;
    static bool fgraded = false;
    find->add_option("-k", k, "dimension")->check(CLI::Range(1, 8));
    find->add_option("--max", max_results, "stop after this many");
    find->add_flag("--graded", fgraded, "graded representations only");
    find->add_option("file", find_file, "DGA file")->required();
    find->callback([] {
        auto d = load_dga(find_file);
        auto s = find_matrix_reps(d, k, fgraded, g.budget, max_results);
        json j{{"k", k}, {"truncated", s.truncated}, {"nodes", s.nodes}, {"reps", json::array()}};
        std::ostringstream os;
        for (const auto& r : s.reps) {
            j["reps"].push_back(json::parse(rep_to_json(d.alg, r)));
            for (std::size_t i = 0; i < r.values.size(); ++i)
                os << d.alg.gen(i).name << '=' << matrix_text(r.values[i]) << (i + 1 < r.values.size() ? " " : "\n");
        }
        os << s.reps.size() << " representation(s) at k = " << k << (s.truncated ? ", search truncated" : "") << '\n';
        emit(j, os.str());
        exit_code = s.reps.empty() && s.truncated ? 2 : 0;
    });

    auto* ver = grp->add_subcommand("verify", "check an augmentation or representation");
    static std::string vdga, vpay;
    ver->add_option("file", vdga, "DGA file")->required();
    ver->add_option("payload", vpay, "JSON payload")->required();
    ver->callback([] {
        auto d = load_dga(vdga);
        auto text = read_file(vpay);
        bool ok = payload_kind(text) == "rep" ? verify_rep(d, rep_from_json(d.alg, text))
                                              : is_augmentation(d, aug_from_json(d.alg, text));
        emit({{"verified", ok}}, std::string(ok ? "verified" : "rejected") + '\n');
        exit_code = ok ? 0 : 1;
    });
}

// ---- diagram

void add_diagram(CLI::App& app) {
    auto* grp = app.add_subcommand("diagram", "Lagrangian projections");
    grp->require_subcommand(1);
    static std::string file, file2;

    auto* dga = grp->add_subcommand("dga", "DGA from immersed disks");
    dga->add_option("file", file, "diagram file")->required();
    dga->callback([] {
        auto d = load_diagram(file);
        auto dg = dga_from_diagram(d);
        auto text = format_dga(dg);
        emit({{"dga", text}, {"tb", tb(d)}, {"rotation", rotation(d)}}, text);
    });

    auto* t = grp->add_subcommand("tb", "Thurston-Bennequin number");
    t->add_option("file", file, "diagram file")->required();
    t->callback([] {
        int v = tb(load_diagram(file));
        emit({{"tb", v}}, std::to_string(v) + '\n');
    });

    auto* r = grp->add_subcommand("rot", "rotation number");
    r->add_option("file", file, "diagram file")->required();
    r->callback([] {
        int v = rotation(load_diagram(file));
        emit({{"rotation", v}}, std::to_string(v) + '\n');
    });

    auto* s = grp->add_subcommand("sum", "connected sum");
    s->add_option("a", file, "first diagram")->required();
    s->add_option("b", file2, "second diagram")->required();
    s->callback([] {
        auto d = connected_sum(load_diagram(file), load_diagram(file2));
        auto text = format_diagram(d);
        emit({{"diagram", text}, {"tb", tb(d)}, {"rotation", rotation(d)}}, text);
    });

    auto* tk = grp->add_subcommand("t2k", "twist-knot family member");
    static int k = 1;
    tk->add_option("k", k, "index")->required()->check(CLI::PositiveNumber);
    tk->callback([] {
        auto text = format_diagram(t2k_diagram(k));
        emit({{"diagram", text}}, text);
    });
}

// ---- kauffman

void add_kauffman(CLI::App& app) {
    auto* grp = app.add_subcommand("kauffman", "Kauffman polynomial and tb bound");
    grp->require_subcommand(1);
    static std::string file;

    auto* poly = grp->add_subcommand("poly", "F(a, z) of a PD code");
    poly->add_option("file", file, "PD file")->required();
    poly->callback([] {
        auto f = kauffman_poly(load_pd(file));
        emit({{"F", to_string(f)}, {"min_deg_a", min_deg_a(f)}}, to_string(f) + '\n');
    });

    auto* bound = grp->add_subcommand("bound", "compare tb with min_deg_a F - 1");
    static int tbv = 0;
    bound->add_option("--tb", tbv, "Thurston-Bennequin number")->required();
    bound->add_option("file", file, "PD file")->required();
    bound->callback([] {
        auto kb = kauffman_bound(tbv, kauffman_poly(load_pd(file)));
        emit({{"tb", kb.tb}, {"bound", kb.bound}, {"verdict", to_string(kb.verdict)}, {"interpretation", kb.interpretation}},
             "tb " + std::to_string(kb.tb) + ", bound " + std::to_string(kb.bound) + ": " + to_string(kb.verdict) + " (" +
                 kb.interpretation + ")\n");
        exit_code = kb.verdict == BoundVerdict::violated ? 1 : 0;
    });
}

// ---- spin

void add_spin(CLI::App& app) {
    auto* grp = app.add_subcommand("spin", "front spinning, algebraic side");
    grp->require_subcommand(1);
    static std::string file;
    static int m = 1;

    auto* shell = grp->add_subcommand("shell", "minimal spun model");
    shell->add_option("file", file, "base DGA")->required();
    shell->add_option("-m", m, "sphere dimension")->check(CLI::PositiveNumber);
    shell->callback([] {
        auto sh = minimal_model(load_dga(file), m);
        auto problems = verify_retraction(retraction(sh));
        auto text = format_dga(sh.spun);
        emit({{"dga", text}, {"retraction_ok", problems.empty()}, {"problems", problems}}, text);
        exit_code = problems.empty() ? 0 : 1;
    });

    auto* tr = grp->add_subcommand("transfer", "move an augmentation or representation across the retraction");
    static std::string payload, direction = "up";
    tr->add_option("--payload", payload, "JSON payload")->required();
    tr->add_option("--direction", direction, "up: base to spun, down: spun to base")
        ->check(CLI::IsMember({"up", "down"}));
    tr->add_option("file", file, "base DGA")->required();
    tr->add_option("-m", m, "sphere dimension")->check(CLI::PositiveNumber);
    tr->callback([] {
        auto sh = minimal_model(load_dga(file), m);
        auto r = retraction(sh);
        const bool up = direction == "up";
        const auto& from = up ? sh.base.alg : sh.spun.alg;
        const auto& to = up ? sh.spun.alg : sh.base.alg;
        auto text = read_file(payload);
        std::string out;
        if (payload_kind(text) == "rep") {
            auto rho = rep_from_json(from, text);
            out = rep_to_json(to, up ? transfer_up(r, rho) : transfer_down(r, rho));
        } else {
            auto eps = aug_from_json(from, text);
            out = aug_to_json(to, up ? transfer_up(r, eps) : transfer_down(r, eps));
        }
        std::cout << out << '\n';
    });

    auto* betti = grp->add_subcommand("betti", "Betti numbers of S^1 x S^m1 x ...");
    static std::vector<int> dims;
    betti->add_option("dims", dims, "sphere dimensions");
    betti->callback([] {
        auto b = product_betti(dims);
        std::string s;
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " " : "") + std::to_string(b[i]);
        emit({{"betti", b}}, s + '\n');
    });
}

// ---- bounds

ChordCensus census_from_file(const std::string& path, int n) { return census_from_dga(load_dga(path), n); }

void add_bounds(CLI::App& app) {
    auto* grp = app.add_subcommand("bounds", "chord-count inequalities");
    grp->require_subcommand(1);
    static std::string census, betti;
    static int n = 2, chi = 0, tbv = 0, k = 1;

    auto* arn = grp->add_subcommand("arnold", "parity and degree-wise inequalities");
    arn->add_option("--betti", betti, "b_0,...,b_n")->required();
    arn->add_option("--census", census, "DGA file whose gradings give the census")->required();
    arn->add_option("-k", k, "representation dimension for the scaled check")->check(CLI::PositiveNumber);
    arn->callback([] {
        auto b = parse_list(betti);
        if (b.empty()) throw Error("empty Betti vector");
        auto c = census_from_file(census, static_cast<int>(b.size()) - 1);
        auto par = arnold_parity_check(b, c);
        json j{{"parity", {{"even", par.even.ok}, {"odd", par.odd.ok}}}};
        std::ostringstream os;
        os << "parity even: " << par.even.betti_sum << " <= 2*" << par.even.chord_sum << (par.even.ok ? " ok" : " VIOLATED") << '\n';
        os << "parity odd: " << par.odd.betti_sum << " <= 2*" << par.odd.chord_sum << (par.odd.ok ? " ok" : " VIOLATED") << '\n';
        bool ok = par.ok();
        if (c.modulus == 0 || c.lifted) {
            auto les = les_rank_check(b, c, k);
            j["degrees"] = json::array();
            for (const auto& d : les.scaled.degrees) {
                j["degrees"].push_back({{"i", d.i}, {"lhs", d.lhs}, {"rhs", d.rhs}, {"ok", d.ok}});
                os << "degree " << d.i << ": " << d.lhs << " <= " << d.rhs << (d.ok ? " ok" : " VIOLATED") << '\n';
            }
            j["k"] = k;
            j["same_as_k1"] = les.same_as_unscaled;
            ok = ok && les.ok();
        }
        emit(j, os.str());
        exit_code = ok ? 0 : 1;
    });

    auto* mc = grp->add_subcommand("minchords", "lower bound on the number of chords");
    static std::vector<std::string> flags;
    mc->add_option("--chi", chi, "Euler characteristic")->required();
    mc->add_option("--n", n, "dimension")->required();
    mc->add_option("--flags", flags, "nontrivial_charalg_no_findim_rep, orientable, nonneg_gradings, maslov_zero")
        ->delimiter(',');
    mc->callback([] {
        ChordFlags f;
        for (const auto& s : flags) {
            if (s == "nontrivial_charalg_no_findim_rep") f.nontrivial_charalg_no_findim_rep = true;
            else if (s == "orientable") f.orientable = true;
            else if (s == "nonneg_gradings") f.nonneg_gradings = true;
            else if (s == "maslov_zero") f.maslov_zero = true;
            else throw Error("unknown flag " + s);
        }
        auto b = min_chords(chi, n, f);
        emit({{"bound", b.bound}, {"reason", b.reason}}, std::to_string(b.bound) + " (" + b.reason + ")\n");
    });

    auto* ct = grp->add_subcommand("chitb", "tb from the census and from chi");
    ct->add_option("--census", census, "DGA file")->required();
    ct->add_option("--chi", chi, "Euler characteristic")->required();
    ct->add_option("--tb", tbv, "Thurston-Bennequin number")->required();
    ct->add_option("--n", n, "dimension (even)")->required();
    ct->callback([] {
        auto r = chi_tb_check(census_from_file(census, n), chi, tbv);
        json j{{"c_even", r.c_even}, {"c_odd", r.c_odd}, {"tb_from_census", r.tb_from_census},
               {"tb_from_chi", r.tb_from_chi}, {"derived_applies", r.derived_applies}, {"derived", r.derived}, {"ok", r.ok()}};
        std::ostringstream os;
        os << "c_even " << r.c_even << ", c_odd " << r.c_odd << '\n'
           << "tb from census: " << (r.tb_from_census ? "ok" : "VIOLATED") << '\n'
           << "tb from chi: " << (r.tb_from_chi ? "ok" : "VIOLATED") << '\n';
        if (r.derived_applies) os << "c_even = |chi|/2 + c_odd: " << (r.derived ? "ok" : "VIOLATED") << '\n';
        emit(j, os.str());
        exit_code = r.ok() ? 0 : 1;
    });
}

// ---- pipeline

void report(const Report& r) {
    std::cout << (g.as_json() ? format_json(r) + "\n" : format_text(r));
    exit_code = r.exit_code();
}

void add_pipeline(CLI::App& app) {
    auto* grp = app.add_subcommand("pipeline", "example chains with VERIFIED / PAPER-ASSERTED / ASSUMED labels");
    grp->require_subcommand(1);
    static std::string dims;

    auto* t19 = grp->add_subcommand("thm19", "torus knot L_{p,-(p+l)} spun over spheres");
    static int p = 3, l = 1;
    static std::string census;
    static bool cert = false;
    t19->add_option("--p", p, "odd p >= 3");
    t19->add_option("--l", l, "q - p");
    t19->add_option("--dims", dims, "sphere dimensions, comma separated");
    t19->add_option("--census", census, "DGA file of the knot (chord gradings)");
    t19->add_flag("--rep-certificate", cert, "a graded 2-dimensional representation is supplied");
    t19->callback([] {
        Theorem19Options o;
        o.rep_certificate = cert;
        if (!census.empty()) o.base_census = census_from_dga(load_dga(census), 1);
        report(pipeline_theorem19(p, l, parse_list(dims), o));
    });

    auto* t111 = grp->add_subcommand("thm111", "rank-property failure for m(10_132) and its spins");
    static std::string file = std::string(LCH_FIXTURE_DIR) + "/m10_132_partial.dga";
    t111->add_option("--file", file, "relations of m(10_132)");
    t111->add_option("--dims", dims, "sphere dimensions, comma separated");
    t111->callback([] {
        Theorem111Input in;
        in.partial = load_dga(file);
        in.bound = g.bound;
        report(pipeline_theorem111(in, parse_list(dims)));
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lch: Legendrian contact homology toolkit"};
    app.require_subcommand(1);
    app.add_option("--budget", g.budget, "search node budget");
    app.add_option("--bound", g.bound, "rewriting degree bound")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "reserved; all searches are deterministic");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.fallthrough();

    add_charalg(app);
    add_reps(app);
    add_diagram(app);
    add_kauffman(app);
    add_spin(app);
    add_bounds(app);
    add_pipeline(app);
    for (auto* grp : app.get_subcommands({})) {
        grp->fallthrough();
        for (auto* sub : grp->get_subcommands({})) sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
