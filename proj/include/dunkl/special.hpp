#ifndef DUNKL_SPECIAL_HPP
#define DUNKL_SPECIAL_HPP

#include <span>
#include <vector>

#include "dunkl/scalar.hpp"

namespace dunkl {

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); empty product for n = 0.
Scalar pochhammer(const Scalar& a, unsigned long n);
Rational pochhammer(const Rational& a, unsigned long n);

/// Binomial coefficient; zero when k < 0 or k > n.
Integer binomial(unsigned long n, long k);

Integer factorial(unsigned long n);

/// Terminating hypergeometric sum
///   sum_{j=0}^{kMax}  prod_i (a_i)_j / prod_i (b_i)_j * z^j / j!
/// evaluated exactly in Q(kappa).  The caller supplies the termination
/// bound kMax; the sum does not detect termination on its own.  Throws
/// DegenerateParameterError when a denominator Pochhammer vanishes
/// identically at a j whose numerator term is nonzero.
Scalar hyp_terminating(std::span<const Scalar> numer_params,
                       std::span<const Scalar> denom_params, const Scalar& z,
                       unsigned long k_max);

}  // namespace dunkl

#endif
