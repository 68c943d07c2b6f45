#include <map>
#include <sstream>

#include "lch/diagram.hpp"
#include "lch/text.hpp"

namespace lch {

LagrangianDiagram parse_diagram(std::string_view text) {
    LagrangianDiagram d;
    std::map<std::string, std::size_t> by_name;
    std::map<int, int> turns;
    std::vector<std::pair<std::size_t, int>> signs;
    bool have_gauss = false;
    for (const auto& ln : split_lines(text)) {
        const auto& kw = ln.words[0];
        if (kw == "crossing") {
            if (ln.words.size() != 3) throw ParseError(ln.where() + "expected 'crossing NAME GRADING'");
            if (by_name.count(ln.words[1])) throw ParseError(ln.where() + "crossing " + ln.words[1] + " declared twice");
            by_name[ln.words[1]] = d.crossings.size();
            d.crossings.push_back({ln.words[1], parse_int(ln.words[2], ln), 0});
        } else if (kw == "gauss") {
            if (have_gauss) throw ParseError(ln.where() + "second gauss line");
            have_gauss = true;
            for (std::size_t i = 1; i < ln.words.size(); ++i) {
                const auto& tok = ln.words[i];
                auto colon = tok.rfind(':');
                if (colon == std::string::npos || tok.size() < colon + 3)
                    throw ParseError(ln.where() + "bad gauss entry '" + tok + "'");
                auto name = tok.substr(0, colon);
                auto role = tok.substr(colon + 1, tok.size() - colon - 2);
                char sign = tok.back();
                auto it = by_name.find(name);
                if (it == by_name.end()) throw ParseError(ln.where() + "undeclared crossing '" + name + "'");
                if (role != "over" && role != "under") throw ParseError(ln.where() + "expected over or under in '" + tok + "'");
                if (sign != '+' && sign != '-') throw ParseError(ln.where() + "missing sign in '" + tok + "'");
                d.gauss.push_back({it->second, role == "over"});
                signs.emplace_back(it->second, sign == '+' ? 1 : -1);
            }
        } else if (kw == "turning") {
            if (ln.words.size() != 3) throw ParseError(ln.where() + "expected 'turning EDGE QUARTER_TURNS'");
            int e = parse_int(ln.words[1], ln);
            if (e < 0 || turns.count(e)) throw ParseError(ln.where() + "bad or repeated edge " + ln.words[1]);
            turns[e] = parse_int(ln.words[2], ln);
        } else if (kw == "corners") {
            if (ln.words.size() != 3) throw ParseError(ln.where() + "expected 'corners NAME PATTERN'");
            auto it = by_name.find(ln.words[1]);
            if (it == by_name.end()) throw ParseError(ln.where() + "undeclared crossing '" + ln.words[1] + "'");
            d.corners.resize(d.crossings.size());
            d.corners[it->second] = ln.words[2];
        } else {
            throw ParseError(ln.where() + "unknown keyword '" + kw + "'");
        }
    }
    for (auto [c, s] : signs) {
        if (d.crossings[c].sign != 0 && d.crossings[c].sign != s)
            throw ParseError("crossing " + d.crossings[c].name + " has inconsistent signs");
        d.crossings[c].sign = s;
    }
    if (!d.corners.empty()) d.corners.resize(d.crossings.size());
    if (!turns.empty()) {
        std::size_t edges = std::max<std::size_t>(d.gauss.size(), 1);
        if (turns.size() != edges || turns.rbegin()->first != static_cast<int>(edges) - 1)
            throw ParseError("turning data must list edges 0.." + std::to_string(edges - 1));
        for (auto [e, t] : turns) d.turning.push_back(t);
    }
    try {
        validate(d);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    return d;
}

LagrangianDiagram load_diagram(const std::string& path) { return parse_diagram(read_file(path)); }

std::string format_diagram(const LagrangianDiagram& d) {
    std::ostringstream os;
    for (const auto& c : d.crossings) os << "crossing " << c.name << " " << c.grading << "\n";
    os << "gauss";
    for (const auto& e : d.gauss)
        os << " " << d.crossings[e.crossing].name << ":" << (e.over ? "over" : "under")
           << (d.crossings[e.crossing].sign > 0 ? "+" : "-");
    os << "\n";
    for (std::size_t i = 0; i < d.turning.size(); ++i) os << "turning " << i << " " << d.turning[i] << "\n";
    for (std::size_t c = 0; c < d.corners.size(); ++c)
        if (!d.corners[c].empty()) os << "corners " << d.crossings[c].name << " " << d.corners[c] << "\n";
    return os.str();
}

}  // namespace lch
