#ifndef DUNKL_SCALAR_HPP
#define DUNKL_SCALAR_HPP

#include <iosfwd>
#include <string>

#include "dunkl/kpoly.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

/// Element of Q(kappa): a reduced fraction of integer-coefficient
/// polynomials in kappa.  Canonical form is an invariant of every value:
///   - the denominator is nonzero and its leading coefficient is positive,
///   - numerator and denominator have gcd 1 over Z (no common polynomial
///     factor and coprime contents),
///   - zero is 0/1.
/// Equality is therefore structural.  Plain rationals embed as
/// constant/constant fractions.
class Scalar {
  public:
    Scalar() : num_(), den_(KPoly::one()) {}
    Scalar(long n) : num_(Integer(n)), den_(KPoly::one()) {}  // NOLINT
    Scalar(const Integer& n) : num_(n), den_(KPoly::one()) {}
    Scalar(const Rational& r) : num_(r.num()), den_(r.den()) {}  // NOLINT
    explicit Scalar(KPoly numerator) : num_(std::move(numerator)), den_(KPoly::one()) {}
    Scalar(KPoly numerator, KPoly denominator);  // reduces to canonical form

    /// The formal parameter kappa.
    static Scalar kappa() { return Scalar(KPoly::kappa()); }

    const KPoly& num() const { return num_; }
    const KPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Requires is_constant().
    Rational to_rational() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    /// Evaluates at kappa = k0.  Throws PoleError when the denominator
    /// vanishes there.
    Rational specialize(const Rational& k0) const;

    std::string str() const;

  private:
    void canonicalize();
    KPoly num_;
    KPoly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace dunkl

#endif
