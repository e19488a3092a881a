#ifndef HYPERCX_MATRIXREP_HPP
#define HYPERCX_MATRIXREP_HPP

#include "hypercx/algebra.hpp"

namespace hypercx {

/// Determinant of the regular representation of a dim-4 hyperbolic cyclic
/// element; exact in rational mode.
Rational det_h(const Element<Rational>& x);
double det_h(const Element<double>& x);

/// det_h(x) + 4(x0 x3 - x1 x2)(x0 x1 - x2 x3) - [(x0^2-x2^2)^2 - (x1^2-x3^2)^2].
/// Identically zero; kept as a residual so the contract is checkable.
Rational det_identity_residual(const Element<Rational>& x);

/// Both determinant estimates that follow from the identity above.
bool det_bounds_check(const Element<Rational>& x);

} // namespace hypercx

#endif
