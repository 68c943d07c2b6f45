#pragma once

// Small helpers shared by the line-oriented file readers.

#include <string>
#include <string_view>
#include <vector>

#include "lch/error.hpp"

namespace lch {

struct Line {
    int number = 0;
    std::string text;                // comment stripped
    std::vector<std::string> words;  // whitespace split
    std::string where() const { return "line " + std::to_string(number) + ": "; }
};

std::vector<Line> split_lines(std::string_view text);
int parse_int(const std::string& s, const Line& ln);
std::string read_file(const std::string& path);

}  // namespace lch
