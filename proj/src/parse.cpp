#include "jacklaurent/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace jl {

namespace {

std::string mono_str(int kdeg, int pdeg) {
    std::string s;
    if (kdeg > 0) {
        s += "k";
        if (kdeg > 1) s += "^" + std::to_string(kdeg);
    }
    if (pdeg > 0) {
        if (!s.empty()) s += "*";
        s += "p0";
        if (pdeg > 1) s += "^" + std::to_string(pdeg);
    }
    return s;
}

// terms: descending order, as (coeff, monomial-string) with empty string for constants
std::string join_terms(const std::vector<std::pair<BigRat, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, mono] : terms) {
        if (first) {
            if (mono.empty()) {
                out += c.str();
            } else if (c.is_one()) {
                out += mono;
            } else {
                out += c.str() + "*" + mono;
            }
            first = false;
        } else {
            BigRat a = c.abs();
            out += (c.sign() > 0) ? " + " : " - ";
            if (mono.empty()) {
                out += a.str();
            } else if (a.is_one()) {
                out += mono;
            } else {
                out += a.str() + "*" + mono;
            }
        }
    }
    return out;
}

}  // namespace

std::string to_string(const UniPoly& p, const char* var) {
    std::vector<std::pair<BigRat, std::string>> terms;
    for (int i = p.degree(); i >= 0; --i) {
        BigRat c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string mono;
        if (i > 0) {
            mono = var;
            if (i > 1) mono += "^" + std::to_string(i);
        }
        terms.emplace_back(c, mono);
    }
    return join_terms(terms);
}

std::string to_string(const PolyKP& p) {
    std::vector<std::pair<BigRat, std::string>> terms;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        terms.emplace_back(it->second, mono_str(it->first.k, it->first.p));
    }
    return join_terms(terms);
}

std::string to_string(const RatK& f) {
    if (f.den().is_one()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::string to_string(const RatKP& f) {
    if (f.den().is_one()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatKP parse() {
        RatKP r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatKP expr() {
        RatKP r = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                r += term();
            } else if (c == '-') {
                ++pos_;
                r -= term();
            } else {
                return r;
            }
        }
    }

    RatKP term() {
        RatKP r = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                r *= factor();
            } else if (c == '/') {
                ++pos_;
                RatKP d = factor();
                if (d.is_zero()) throw Error("zero denominator");
                r /= d;
            } else {
                return r;
            }
        }
    }

    RatKP factor() {
        bool neg = false;
        for (;;) {
            char c = peek();
            if (c == '-') {
                ++pos_;
                neg = !neg;
            } else if (c == '+') {
                ++pos_;
            } else {
                break;
            }
        }
        RatKP a = atom();
        if (peek() == '^') {
            ++pos_;
            long e = integer();
            if (e < 0) throw ParseError("negative exponent", pos_);
            a = a.pow(static_cast<int>(e));
        }
        return neg ? -a : a;
    }

    RatKP atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatKP r = expr();
            if (!consume(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RatKP(BigRat(digits()));
        }
        if (c == 'p') {
            if (s_.substr(pos_, 2) == "p0") {
                pos_ += 2;
                return RatKP::p0();
            }
            throw ParseError("expected 'p0'", pos_);
        }
        if (c == 'k') {
            ++pos_;
            return RatKP::k();
        }
        throw ParseError("expected a number, 'k', 'p0', or '('", pos_);
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw ParseError("expected an integer", pos_);
        long v = std::stol(digits());
        return neg ? -v : v;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected digits", pos_);
        return std::string(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatKP parse_ratkp(std::string_view s) { return Parser(s).parse(); }

}  // namespace jl
