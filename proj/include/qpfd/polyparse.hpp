#ifndef QPFD_POLYPARSE_HPP
#define QPFD_POLYPARSE_HPP

#include <string>

#include "qpfd/poly.hpp"
#include "qpfd/qratfunc.hpp"

namespace qpfd {

// Parses a polynomial in x with coefficients in Q(q), e.g.
//   "q*x^2 - (1+q)*x + 1"
// Grammar: sums/differences of terms; terms multiply/divide factors;
// a factor is an optionally signed atom with an optional ^exponent;
// atoms are integers, q, x, or a parenthesized expression. Division and
// negative exponents are only allowed on x-free values. Throws ParseError.
Poly<QRatFunc> parse_poly(const std::string& text);

}  // namespace qpfd

#endif  // QPFD_POLYPARSE_HPP
