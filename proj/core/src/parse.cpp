#include <cctype>

#include "lch/freealg.hpp"

namespace lch {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
    Parser(const Algebra& alg, std::string_view s) : alg_(alg), s_(s) {}

    Poly run() {
        Poly p = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    const Algebra& alg_;
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly sum() {
        if (peek() == '+' || peek() == '-') ++pos_;
        Poly p = product();
        while (peek() == '+' || peek() == '-') {
            ++pos_;
            p += product();
        }
        return p;
    }

    Poly product() {
        Poly p = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                p *= power();
            } else if (c == '(' || ident_start(c) || std::isdigit(static_cast<unsigned char>(c))) {
                p *= power();
            } else {
                return p;
            }
        }
    }

    Poly power() {
        Poly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Poly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = sum();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && ident_start(s_[pos_])) fail("identifier may not start with a digit");
            char last = s_[pos_ - 1];
            (void)start;
            return ((last - '0') % 2) ? Poly::one() : Poly::zero();
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            return Poly::word(split(s_.substr(start, pos_ - start)));
        }
        fail("expected a term");
    }

    // Split a run of identifier characters into declared generator names.
    Word split(std::string_view tok) {
        if (auto l = alg_.find(tok)) return Word{*l};
        const std::size_t n = tok.size();
        // ways[i]: number of parses of tok[i..] (capped at 2), next[i]: chosen length
        std::vector<int> ways(n + 1, 0);
        std::vector<std::size_t> next(n + 1, 0);
        ways[n] = 1;
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t len = 1; i + len <= n; ++len) {
                if (!ways[i + len] || !alg_.find(tok.substr(i, len))) continue;
                if (!ways[i]) next[i] = len;
                ways[i] = std::min(2, ways[i] + ways[i + len]);
            }
        }
        if (ways[0] == 0) fail("unknown generator '" + std::string(tok) + "'");
        if (ways[0] > 1) fail("ambiguous juxtaposition '" + std::string(tok) + "'");
        Word w;
        for (std::size_t i = 0; i < n; i += next[i]) w.push_back(*alg_.find(tok.substr(i, next[i])));
        return w;
    }
};

}  // namespace

Poly parse_poly(const Algebra& alg, std::string_view text) { return Parser(alg, text).run(); }

}  // namespace lch
