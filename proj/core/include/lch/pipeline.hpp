#pragma once

// End-to-end example chains with a per-claim epistemic label.

#include <optional>
#include <string>
#include <vector>

#include "lch/bounds.hpp"
#include "lch/dga.hpp"

namespace lch {

enum class Level { verified, paper_asserted, assumed };
enum class Status { pass, fail, inconclusive, info };

std::string to_string(Level l);
std::string to_string(Status s);

struct ReportItem {
    Level level = Level::verified;
    Status status = Status::info;
    std::string claim;
    std::string detail;
};

struct Report {
    std::string title;
    std::vector<ReportItem> items;
    void add(Level l, Status s, std::string claim, std::string detail = {});
    // 1 if a verified claim failed, else 2 if one was inconclusive, else 0.
    int exit_code() const;
};

std::string format_text(const Report& r);
std::string format_json(const Report& r);

// Metadata of the negative torus knot representative L_{p,-q}.
struct TorusLegendrian {
    int p = 3, q = 4;
    int tb = 0;
    int rotation = 0;
    int maslov = 0;
    std::vector<int> braid;  // (sigma_1^-1 ... sigma_{p-1}^-1)^q
};

// p >= 3 odd, q > p.
TorusLegendrian torus_legendrian(int p, int q);

struct Theorem19Options {
    bool rep_certificate = false;               // a graded 2-dim representation is supplied
    std::optional<ChordCensus> base_census;     // chords of the knot, integer gradings
};

Report pipeline_theorem19(int p, int l, const std::vector<int>& sphere_dims, const Theorem19Options& opt = {});

inline constexpr const char* kM10132Braid = "4, 5, 3, 5, 3, 2, 4, 1, 3, 2, 4, 2, 5, 1, 3, 2, 4, 4, 3, 5, 4, 2";

// partial: the DGA holding the relations of m(10_132). The names x, y, p, q
// are either generators or given as polynomials in the generators.
struct Theorem111Input {
    DGA partial;
    std::string x = "1+x5(x2+x3)", y = "x20", p = "x13+x8(x2+x3)", q = "x18";
    int bound = 8;
};

Report pipeline_theorem111(const Theorem111Input& in, const std::vector<int>& sphere_dims);

}  // namespace lch
