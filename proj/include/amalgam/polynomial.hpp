#ifndef AMALGAM_POLYNOMIAL_HPP
#define AMALGAM_POLYNOMIAL_HPP

#include "amalgam/rational.hpp"

#include <string>
#include <vector>

namespace amalgam {

/// Polynomial over Q, coefficients low to high, no trailing zeros.
using Poly = std::vector<Rational>;

Poly poly_normalize(Poly p);
std::size_t poly_degree(const Poly& p);  // degree of 0 is 0 by convention here
bool poly_is_zero(const Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
/// Exact division with remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
bool poly_divides(const Poly& b, const Poly& a);  // b | a
Poly poly_monic(const Poly& p);
Poly poly_gcd(const Poly& a, const Poly& b);  // monic
Poly poly_derivative(const Poly& p);
Poly poly_squarefree_part(const Poly& p);
Rational poly_eval(const Poly& p, const Rational& x);

/// Distinct rational roots, found via the rational-root theorem on the
/// primitive integer form. Ascending order.
std::vector<Rational> poly_rational_roots(const Poly& p);

/// Some irreducible factor of p over Q with degree >= 2; requires p
/// squarefree with no rational roots. Uses Kronecker interpolation for
/// degree >= 4; throws Error beyond a small search budget.
Poly poly_irreducible_factor(const Poly& p);

std::string poly_str(const Poly& p, const std::string& var = "x");

}  // namespace amalgam

#endif
