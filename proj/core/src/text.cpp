#include "lch/text.hpp"

#include <fstream>
#include <sstream>

namespace lch {

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::istringstream is{std::string(text)};
    std::string raw;
    int n = 0;
    while (std::getline(is, raw)) {
        ++n;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        Line ln;
        ln.number = n;
        ln.text = raw;
        std::istringstream ws(raw);
        std::string w;
        while (ws >> w) ln.words.push_back(w);
        if (!ln.words.empty()) out.push_back(std::move(ln));
    }
    return out;
}

int parse_int(const std::string& s, const Line& ln) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(ln.where() + "expected an integer, got '" + s + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace lch
