#pragma once

#include <string>
#include <vector>

#include "depthlab/poly.hpp"

namespace depthlab {

// Parses a polynomial from text. Supported syntax: integer coefficients,
// variable names from `vars`, powers with '^', explicit '*' or implicit
// multiplication by juxtaposition ("3x^2y" == "3*x^2*y"), and '+'/'-'.
// Coefficients are reduced mod the field characteristic. Position info for
// errors starts at (base_line, base_col).
Poly parse_poly(const PrimeField& F, const std::string& text,
                const std::vector<std::string>& vars, int base_line = 1,
                int base_col = 1);

// Canonical rendering: terms in descending monomial order joined by " + ",
// coefficients printed as representatives in 0..p-1, explicit '*' between
// factors, '^' only for exponents greater than 1. The zero polynomial
// prints as "0".
std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars);

}  // namespace depthlab
