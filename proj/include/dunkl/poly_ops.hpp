#ifndef DUNKL_POLY_OPS_HPP
#define DUNKL_POLY_OPS_HPP

#include "dunkl/permutation.hpp"
#include "dunkl/polynomial.hpp"

namespace dunkl {

/// Action of w on polynomials: monomial x^a goes to x^{wa}, coefficients
/// are untouched.
Polynomial permute(const Permutation& w, const Polynomial& f);
/// Shorthand for the transposition (i, j) acting on f.
Polynomial transpose_vars(const Polynomial& f, int i, int j);

/// Exact divided difference (f - (i,j)f) / (x_i - x_j), computed termwise
/// by the closed monomial rule; no polynomial division is performed.
/// Indices are 1-based.
Polynomial divided_difference(const Polynomial& f, int i, int j);

/// Formal partial derivative with respect to x_i (1-based).
Polynomial partial(const Polynomial& f, int i);

/// Substitutes kappa = k0 in every coefficient.  Throws PoleError when a
/// coefficient denominator vanishes there.
Polynomial specialize(const Polynomial& f, const Rational& k0);

}  // namespace dunkl

#endif
