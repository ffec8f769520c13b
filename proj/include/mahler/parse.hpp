#pragma once

#include "mahler/ratfun_mat.hpp"

#include <stdexcept>
#include <string>

namespace mahler {

/// Syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, size_t line, size_t col)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col)),
          line_(line),
          col_(col) {}
    size_t line() const { return line_; }
    size_t col() const { return col_; }

private:
    size_t line_, col_;
};

/// Parses a square matrix of rational-function expressions.
/// Grammar: matrix := row (';' row)*; row := expr (',' expr)*; expressions
/// use + - * / ^ over integers and z, with parentheses; '^' binds tighter
/// than unary minus. Whitespace is insignificant. Throws ParseError on bad
/// syntax, ragged rows, or a non-square result.
RatFunMat parse_matrix(const std::string& text);

/// Serializations that parse_matrix maps back to the same exact values.
std::string serialize_ratfun(const RatFun& f);
std::string serialize_matrix(const RatFunMat& m);

}  // namespace mahler
