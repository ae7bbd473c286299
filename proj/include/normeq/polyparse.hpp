// polyparse.hpp — parser and printer for the textual polynomial syntax used
// on the command line and in field-spec files: integer coefficients, the
// variables x and t, operators + - * ^, parentheses, implicit products
// ("4x^3" or "(x+1)t"). Parsed over F_q with coefficients reduced mod q.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "normeq/poly.hpp"

namespace normeq {

struct ParseError : std::runtime_error {
    size_t line, col;
    ParseError(const std::string& msg, size_t line_, size_t col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) +
                             ", column " + std::to_string(col_)),
          line(line_), col(col_) {}
};

// univariate polynomial in x (t is rejected)
Poly parse_poly_x(const std::string& text, uint32_t q);

// polynomial in t with k[x] coefficients; result[i] multiplies t^i
std::vector<Poly> parse_poly_xt(const std::string& text, uint32_t q);

// canonical rendering of a t-polynomial with k[x] coefficients
std::string poly_xt_to_string(const std::vector<Poly>& f);

}  // namespace normeq
