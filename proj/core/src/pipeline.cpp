#include "lch/pipeline.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

#include "lch/charalg.hpp"
#include "lch/kauffman.hpp"
#include "lch/spin.hpp"

namespace lch {

std::string to_string(Level l) {
    switch (l) {
        case Level::verified: return "VERIFIED";
        case Level::paper_asserted: return "PAPER-ASSERTED";
        case Level::assumed: return "ASSUMED";
    }
    return "?";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "FAIL";
        case Status::inconclusive: return "inconclusive";
        case Status::info: return "-";
    }
    return "?";
}

void Report::add(Level l, Status s, std::string claim, std::string detail) {
    items.push_back({l, s, std::move(claim), std::move(detail)});
}

int Report::exit_code() const {
    bool inconclusive = false;
    for (const auto& it : items) {
        if (it.status == Status::fail) return 1;
        if (it.status == Status::inconclusive) inconclusive = true;
    }
    return inconclusive ? 2 : 0;
}

std::string format_text(const Report& r) {
    std::ostringstream os;
    os << r.title << '\n';
    for (const auto& it : r.items) {
        os << "  [" << to_string(it.level) << "] " << it.claim << " : " << to_string(it.status);
        if (!it.detail.empty()) os << "  (" << it.detail << ')';
        os << '\n';
    }
    return os.str();
}

std::string format_json(const Report& r) {
    nlohmann::json j;
    j["title"] = r.title;
    j["exit_code"] = r.exit_code();
    j["items"] = nlohmann::json::array();
    for (const auto& it : r.items)
        j["items"].push_back({{"level", to_string(it.level)},
                              {"status", to_string(it.status)},
                              {"claim", it.claim},
                              {"detail", it.detail}});
    return j.dump(2);
}

TorusLegendrian torus_legendrian(int p, int q) {
    if (p < 3 || p % 2 == 0) throw Error("p must be odd and at least 3");
    if (q <= p) throw Error("q must exceed p");
    TorusLegendrian t;
    t.p = p;
    t.q = q;
    t.tb = -p * q;
    t.rotation = q - p;
    t.maslov = 2 * t.rotation;
    for (int i = 0; i < q; ++i)
        for (int s = 1; s < p; ++s) t.braid.push_back(-s);
    return t;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

ChordCensus spin_census(const ChordCensus& c, int m) {
    ChordCensus out;
    out.n = c.n + m;
    out.modulus = c.modulus;
    out.lifted = c.lifted;
    for (const auto& [g, k] : c.c) {
        out.c[g] += k;
        out.c[g + m] += k;
    }
    return out;
}

}  // namespace

Report pipeline_theorem19(int p, int l, const std::vector<int>& dims, const Theorem19Options& opt) {
    if (l < 1) throw Error("l must be positive");
    const auto t = torus_legendrian(p, p + l);
    Report r;
    r.title = "L_{" + std::to_string(p) + ",-" + std::to_string(t.q) + "} spun over S^1 x [" + join(dims) + "]";

    r.add(Level::paper_asserted, Status::info, "tb = -pq = " + std::to_string(t.tb));
    r.add(Level::paper_asserted, Status::info,
          "rotation = q - p = " + std::to_string(t.rotation) + ", Maslov number " + std::to_string(t.maslov));

    const std::size_t ncross = t.braid.size();
    if (ncross > kKauffmanCrossingCap) {
        r.add(Level::verified, Status::inconclusive, "Kauffman bound strict",
              std::to_string(ncross) + " crossings exceed the cap of " + std::to_string(kKauffmanCrossingCap));
    } else {
        auto f = kauffman_poly(pd_from_braid(t.braid, p));
        auto kb = kauffman_bound(t.tb, f);
        r.add(Level::verified, kb.verdict == BoundVerdict::strict ? Status::pass : Status::fail,
              "Kauffman bound strict",
              "tb " + std::to_string(kb.tb) + " vs min_deg_a F - 1 = " + std::to_string(kb.bound) + ", verdict " +
                  to_string(kb.verdict));
        r.add(Level::paper_asserted, Status::info, "strict bound: no ungraded augmentation", kb.interpretation);
    }

    r.add(Level::assumed, Status::info, "graded 2-dimensional representation exists",
          opt.rep_certificate ? "certificate supplied" : "no certificate supplied");

    auto census = opt.base_census;
    int n = 1;
    for (int m : dims) {
        if (m < 1) throw Error("sphere dimensions must be >= 1");
        n += m;
        std::string detail = "chords of degree g give degrees g and g+" + std::to_string(m);
        if (census) {
            census = spin_census(*census, m);
            detail += ", total " + std::to_string(census->total());
        }
        r.add(Level::verified, Status::pass, "S^" + std::to_string(m) + " spin: dimension " + std::to_string(n), detail);
    }

    auto b = product_betti(dims);
    bool sym = std::equal(b.begin(), b.end(), b.rbegin());
    r.add(Level::verified, sym ? Status::pass : Status::fail, "Betti numbers (" + join(b) + ")", "Poincare symmetric");

    if (census) {
        auto par = arnold_parity_check(b, *census);
        r.add(Level::verified, par.ok() ? Status::pass : Status::fail, "parity inequalities",
              "even " + std::to_string(par.even.betti_sum) + " <= 2*" + std::to_string(par.even.chord_sum) + ", odd " +
                  std::to_string(par.odd.betti_sum) + " <= 2*" + std::to_string(par.odd.chord_sum));
        auto deg = arnold_graded_check(b, *census);
        r.add(Level::verified, deg.ok() ? Status::pass : Status::fail, "degree-wise inequalities");
    } else {
        int even = 0, odd = 0;
        for (std::size_t i = 0; i < b.size(); ++i) (i % 2 ? odd : even) += b[i];
        r.add(Level::verified, Status::info, "chord lower bound from Betti numbers",
              "even >= " + std::to_string((even + 1) / 2) + ", odd >= " + std::to_string((odd + 1) / 2) +
                  " given the representation");
    }
    r.add(Level::paper_asserted, Status::info, "spun Legendrians for different l are distinguished by Maslov data",
          "only the base Maslov number is reported");
    return r;
}

Report pipeline_theorem111(const Theorem111Input& in, const std::vector<int>& dims) {
    Report r;
    r.title = "m(10_132): rank property fails, spun over S^1 x [" + join(dims) + "]";
    r.add(Level::paper_asserted, Status::info, "front braid word", kM10132Braid);

    const auto& alg = in.partial.alg;
    const Poly x = parse_poly(alg, in.x), y = parse_poly(alg, in.y), p = parse_poly(alg, in.p), q = parse_poly(alg, in.q);
    const Poly one = Poly::one(), yx = y * x;
    auto rels = in.partial.relations();
    auto rs = complete(rels, in.bound);

    auto tri = contains_unit(rs);
    r.add(Level::verified,
          tri == Tri::no_up_to_bound ? Status::pass : tri == Tri::yes ? Status::fail : Status::inconclusive,
          "characteristic algebra non-zero", "unit in ideal: " + to_string(tri));

    auto reduces = [&](const std::string& claim, const Poly& e) {
        bool z = normal_form(rs, e).is_zero();
        Status s = z ? Status::pass : rs.complete_up_to_bound ? Status::fail : Status::inconclusive;
        r.add(Level::verified, s, claim, "bound " + std::to_string(in.bound));
        return z;
    };
    reduces("xy = 1", x * y + one);
    reduces("pq = 1", p * q + one);
    reduces("p(1+yx)q = 1", p * (one + yx) * q + one);

    auto w = fact51_witness(x, y, p, q);
    bool ok = verify_rank_witness(rs, w);
    r.add(Level::verified, ok ? Status::pass : rs.complete_up_to_bound ? Status::fail : Status::inconclusive,
          "AB = I_2 for the 2x1 / 1x2 witness");
    if (ok) r.add(Level::verified, Status::pass, "rank property fails for the characteristic algebra", "m = 2 > n = 1");

    DGA cur = in.partial;
    std::vector<Poly> carry;
    for (std::size_t i = 0; i < cur.size(); ++i) carry.push_back(Poly::gen(static_cast<Letter>(i)));
    int n = 1;
    for (int m : dims) {
        auto sh = minimal_model(cur, m);
        auto ret = retraction(sh);
        for (auto& c : carry) c = substitute(c, ret.iota.images);
        cur = sh.spun;
        n += m;
        RankWitness wi = w;
        for (auto* mat : {&wi.A, &wi.B})
            for (auto& row : *mat)
                for (auto& e : row) e = substitute(e, carry);
        auto srs = complete(cur.relations(), in.bound);
        bool sok = verify_rank_witness(srs, wi);
        r.add(Level::verified, sok ? Status::pass : srs.complete_up_to_bound ? Status::fail : Status::inconclusive,
              "witness survives in the minimal spun model, dimension " + std::to_string(n));
    }
    if (!dims.empty())
        r.add(Level::paper_asserted, Status::info,
              "rank property fails for the spun Legendrian of dimension " + std::to_string(n),
              "the unital morphism iota carries AB = I_2 to the spun characteristic algebra");
    return r;
}

}  // namespace lch
