#pragma once

#include <string>

#include "qf/poly.hpp"

namespace qf {

/// Parse the equation DSL:
///   vars p1 q1 r1
///   layout 175 p=1 q=1 r=1        # optional, needed only to decode factors
///   p1 + q1 + r1 - 1 = 0
///   p1*q1 + q1*r1 + p1*r1 = 0
/// Statements are separated by newlines or ';'; '#' starts a comment.
/// Throws ParseError with line/column on malformed input.
EquationSystem parse_equations(const std::string& text);

/// Inverse of parse_equations: parse(print(sys)) == sys.
std::string print_system(const EquationSystem& sys);

std::string print_polynomial(const BinaryPolynomial& poly, const EquationSystem& sys);

}  // namespace qf
