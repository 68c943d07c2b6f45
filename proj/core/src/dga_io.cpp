#include <fstream>
#include <sstream>

#include "lch/dga.hpp"
#include "lch/text.hpp"

namespace lch {

namespace {

std::optional<Action> parse_action(const std::string& tok, const std::string& eps) {
    Action a;
    auto slash = tok.find('/');
    try {
        a.num = std::stoll(tok.substr(0, slash));
        if (slash != std::string::npos) a.den = std::stoll(tok.substr(slash + 1));
        if (!eps.empty()) a.eps_power = std::stoi(eps);
    } catch (const std::exception&) {
        throw ParseError("bad action '" + tok + "'");
    }
    return a;
}

}  // namespace

DGA parse_dga(std::string_view text) {
    auto lines = split_lines(text);
    int modulus = 0;
    for (const auto& ln : lines) {
        if (!ln.words.empty() && ln.words[0] == "modulus") {
            if (ln.words.size() != 2) throw ParseError(ln.where() + "expected 'modulus N'");
            modulus = parse_int(ln.words[1], ln);
        }
    }
    DGA dga(modulus);
    for (const auto& ln : lines) {
        if (ln.words.empty() || ln.words[0] != "gen") continue;
        if (ln.words.size() < 3 || ln.words.size() > 5) throw ParseError(ln.where() + "expected 'gen NAME GRADING [ACTION [EPS]]'");
        std::optional<Action> act;
        if (ln.words.size() >= 4) act = parse_action(ln.words[3], ln.words.size() == 5 ? ln.words[4] : "");
        try {
            dga.add(ln.words[1], parse_int(ln.words[2], ln), {}, act);
        } catch (const Error& e) {
            throw ParseError(ln.where() + e.what());
        }
    }
    std::vector<bool> seen(dga.size(), false);
    for (const auto& ln : lines) {
        if (ln.words.empty()) continue;
        const auto& kw = ln.words[0];
        try {
            if (kw == "d") {
                auto eq = ln.text.find('=');
                if (ln.words.size() < 3 || eq == std::string::npos) throw ParseError("expected 'd NAME = POLY'");
                Letter l = dga.index(ln.words[1]);
                if (seen[l]) throw ParseError("differential of " + ln.words[1] + " given twice");
                seen[l] = true;
                dga.d[l] = parse_poly(dga.alg, ln.text.substr(eq + 1));
            } else if (kw == "rel") {
                dga.extra.push_back(parse_poly(dga.alg, ln.text.substr(ln.text.find("rel") + 3)));
            } else if (kw == "partial") {
                dga.partial = true;
            } else if (kw != "gen" && kw != "modulus") {
                throw ParseError("unknown keyword '" + kw + "'");
            }
        } catch (const ParseError& e) {
            throw ParseError(ln.where() + e.what());
        } catch (const Error& e) {
            throw ParseError(ln.where() + e.what());
        }
    }
    return dga;
}

DGA load_dga(const std::string& path) { return parse_dga(read_file(path)); }

std::string format_dga(const DGA& dga) {
    std::ostringstream os;
    os << "modulus " << dga.alg.modulus() << "\n";
    if (dga.partial) os << "partial\n";
    for (const auto& g : dga.alg.generators()) {
        os << "gen " << g.name << ' ' << g.grading;
        if (g.action) {
            os << ' ' << g.action->num;
            if (g.action->den != 1) os << '/' << g.action->den;
            if (g.action->eps_power) os << ' ' << g.action->eps_power;
        }
        os << "\n";
    }
    for (std::size_t i = 0; i < dga.size(); ++i)
        if (!dga.d[i].is_zero()) os << "d " << dga.alg.gen(i).name << " = " << to_string(dga.alg, dga.d[i]) << "\n";
    for (const auto& r : dga.extra) os << "rel " << to_string(dga.alg, r) << "\n";
    return os.str();
}

}  // namespace lch
