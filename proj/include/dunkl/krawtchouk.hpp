#ifndef DUNKL_KRAWTCHOUK_HPP
#define DUNKL_KRAWTCHOUK_HPP

#include <span>
#include <vector>

#include "dunkl/jack.hpp"

namespace dunkl {

/// Symmetric Krawtchouk polynomial K_m(t; n) (parameters n, 1/2):
///   K_m(t; n) = binom(n,m)^{-1} sum_{j=0}^{m} (t-n)_{m-j} (-t)_j /
///               ((m-j)! j!) * (-1)^{m-j}.
/// The defining sum is polynomial in t, so rational arguments are allowed;
/// the orthogonality weight lives on t = 0..n.
Rational krawtchouk(int m, const Rational& t, int n);

/// q_{mn}: the image of the p-basis under (s,t) -> (u+v, u-v) in the
/// generating function, i.e. the coefficient of u^m v^n in
/// sum p_{ij} (u+v)^i (u-v)^j.  Homogeneous of degree m+n.
Polynomial q_poly(int m, int n, JackBasis& basis);
Polynomial q_poly(int m, int n, const DunklContext& ctx);

/// Basis change on a homogeneous slice: given f = sum_i c_i p_{n-i,i}
/// returns d with f = sum_i d_i q_{n-i,i},
///   d_i = 2^{-n} sum_j binom(n,j) c_j K_i(j; n).
std::vector<Scalar> p_to_q(std::span<const Scalar> c);

/// Truncated power series in one formal variable u over Q(kappa).
struct UnivariateSeries {
    std::vector<Scalar> coef;  // ascending powers of u, indices 0..truncation
    int truncation = 0;

    const Scalar& coeff(int k) const;
    /// Degree of the stored polynomial part; -1 when identically zero.
    int degree() const;
    friend bool operator==(const UnivariateSeries& a, const UnivariateSeries& b);
};

enum class ABKind { A, B };

/// Coefficient of v^n in (1-(u+v))^{-kappa-e} (1-(u-v))^{-kappa} as a
/// u-series truncated at `truncation`, where e = 0 for kind A and e = 1
/// for kind B.  This is the independent expansion route; ab_closed gives
/// the half-integer closed forms.
UnivariateSeries ab_series(ABKind kind, int n, const DunklContext& ctx, int truncation);

/// Exact polynomial values at kappa = -l - 1/2 for n <= 2l:
///   A_{2j}(u) = (-l-1/2)_j / j! * (1-u)^{2l+1-2j},   A_odd = 0,
///   B_n(u)    = (-l+1/2)_{floor(n/2)} / floor(n/2)! * (1-u)^{2l-n}.
/// Throws RangeError for n > 2l, where no polynomial form is asserted.
UnivariateSeries ab_closed(ABKind kind, int n, int l);

}  // namespace dunkl

#endif
