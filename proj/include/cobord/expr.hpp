#ifndef COBORD_EXPR_HPP
#define COBORD_EXPR_HPP

#include <string>
#include <vector>

#include "cobord/graded_poly.hpp"

namespace cobord {

// Parses "3*x^2*y - 1/2*z + 4" over the given variable universe.
// Terms are separated by +/-, factors by '*', exponents by '^';
// coefficients are integers or fractions p/q. No parentheses.
GradedPoly parse_polynomial(const std::string& text, const VarTablePtr& vars);

// Identifiers appearing in an expression, in order of first appearance.
std::vector<std::string> collect_identifiers(const std::string& text);

} // namespace cobord

#endif
