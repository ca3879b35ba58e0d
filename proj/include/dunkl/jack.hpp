#ifndef DUNKL_JACK_HPP
#define DUNKL_JACK_HPP

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "dunkl/context.hpp"
#include "dunkl/poly_ops.hpp"

namespace dunkl {

/// Construction of the basic polynomials p_{mn} and the Jack-type
/// polynomials omega_{mn} for one context, with memoization.
///
/// The generating function
///   (1 - s x_1)^{-1} (1 - t x_2)^{-1} prod_i ((1 - s x_i)(1 - t x_i))^{-kappa}
/// factors as F(s) G(t), where F carries the s-dependent part and G is its
/// image under (1,2).  p_{mn} = [s^m]F * [t^n]G, each univariate factor
/// expanded by the negative binomial series.  All accessors are safe to
/// call from several threads.
class JackBasis {
  public:
    explicit JackBasis(DunklContext ctx);

    const DunklContext& context() const { return ctx_; }

    /// Coefficient of s^m t^n of the generating function; homogeneous of
    /// degree m + n.
    const Polynomial& p(int m, int n);

    /// The nonsymmetric Jack polynomial omega_{mn} per its p-basis
    /// expansion; omega_{nm} = (1,2) omega_{mn} for m < n.  In specialized
    /// mode throws PoleError when kappa hits a pole of a coefficient
    /// (exactly the kappa in -N exclusions for that label).
    const Polynomial& omega(int m, int n);

    /// Coefficients of omega_{mn} over { p_{d-j, j} : 0 <= j <= d },
    /// d = m + n, straight from its defining expansion (no polynomial
    /// arithmetic).
    std::vector<Scalar> omega_p_coeffs(int m, int n) const;

    /// Closed form of omega_{mn}(1^N).  Evaluation at 1^N is symmetric, so
    /// labels with m < n are evaluated as omega_{nm}(1^N).
    Scalar omega_at_ones(int m, int n) const;

  private:
    void ensure_series(int deg);  // callers hold mu_
    const Polynomial& p_locked(int m, int n);

    DunklContext ctx_;
    std::mutex mu_;
    std::vector<Polynomial> fc_;  // [s^k] F
    std::vector<Polynomial> gc_;  // [t^k] G = (1,2) [s^k] F
    std::map<std::pair<int, int>, Polynomial> pcache_;
    std::map<std::pair<int, int>, Polynomial> ocache_;
};

/// One-shot conveniences over a throwaway JackBasis.
Polynomial p_poly(int m, int n, const DunklContext& ctx);
Polynomial omega(int m, int n, const DunklContext& ctx);
Scalar omega_at_ones(int m, int n, const DunklContext& ctx);

/// The explicit N = 2 family
///   f_{mn} = (x_1 x_2)^n sum_{j=0}^{m-n} (kappa+1)_{m-n-j} (kappa)_j /
///            ((m-n-j)! j!) x_1^{m-n-j} x_2^j,  m >= n.
/// kappa stays generic unless a value is supplied.
Polynomial f_poly(int m, int n, const std::optional<Rational>& kappa = std::nullopt);

/// Sets x_i = 0 for i > 2 and reindexes to two variables.
Polynomial restrict_to_2(const Polynomial& f);

}  // namespace dunkl

#endif
