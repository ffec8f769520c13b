#include "mahler/parse.hpp"

#include <cctype>
#include <vector>

namespace mahler {

namespace {

// Recursive-descent evaluator straight into exact rational functions.
class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RatFunMat matrix() {
        std::vector<std::vector<RatFun>> rows;
        rows.push_back(row());
        while (peek() == ';') {
            get();
            rows.push_back(row());
        }
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected trailing input");
        const size_t n = rows.size();
        for (const auto& r : rows)
            if (r.size() != rows[0].size()) fail("ragged matrix rows");
        if (rows[0].size() != n) fail("matrix is not square");
        RatFunMat m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
        return m;
    }

private:
    std::vector<RatFun> row() {
        std::vector<RatFun> r;
        r.push_back(expr());
        while (peek() == ',') {
            get();
            r.push_back(expr());
        }
        return r;
    }

    RatFun expr() {
        RatFun acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                get();
                acc = acc + term();
            } else if (c == '-') {
                get();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    RatFun term() {
        RatFun acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                get();
                acc = acc * factor();
            } else if (c == '/') {
                get();
                RatFun rhs = factor();
                if (rhs.is_zero()) fail("division by zero");
                acc = acc / rhs;
            } else {
                return acc;
            }
        }
    }

    RatFun factor() {
        char c = peek();
        if (c == '-') {
            get();
            return -factor();
        }
        if (c == '+') {
            get();
            return factor();
        }
        return power();
    }

    RatFun power() {
        RatFun base = atom();
        if (peek() == '^') {
            get();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(cur()))) fail("expected integer exponent");
            unsigned long e = integer().get_ui();
            RatFun acc(1);
            for (unsigned long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    RatFun atom() {
        char c = peek();
        if (c == '(') {
            get();
            RatFun inner = expr();
            if (peek() != ')') fail("expected ')'");
            get();
            return inner;
        }
        if (c == 'z') {
            get();
            return RatFun::z();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            skip_ws();
            return RatFun(Rational(integer()));
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
        return RatFun();  // unreachable
    }

    Int integer() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits += s_[pos_];
            advance();
        }
        return Int(digits);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char cur() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() {
        skip_ws();
        char c = cur();
        advance();
        return c;
    }
    void advance() {
        if (pos_ >= s_.size()) return;
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    const std::string& s_;
    size_t pos_ = 0;
    size_t line_ = 1, col_ = 1;
};

}  // namespace

RatFunMat parse_matrix(const std::string& text) { return Parser(text).matrix(); }

std::string serialize_ratfun(const RatFun& f) {
    if (f.den() == Poly(Rational(1))) return "(" + f.num().str() + ")";
    return "(" + f.num().str() + ")/(" + f.den().str() + ")";
}

std::string serialize_matrix(const RatFunMat& m) {
    std::string out;
    for (size_t i = 0; i < m.rows(); ++i) {
        if (i) out += "; ";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            out += serialize_ratfun(m.at(i, j));
        }
    }
    return out;
}

}  // namespace mahler
