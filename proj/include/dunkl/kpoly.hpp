#ifndef DUNKL_KPOLY_HPP
#define DUNKL_KPOLY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

/// Univariate polynomial in the formal parameter kappa with integer
/// coefficients, stored densely in ascending degree with no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
class KPoly {
  public:
    KPoly() = default;
    explicit KPoly(const Integer& constant);
    explicit KPoly(std::vector<Integer> coeffs);  // trims trailing zeros

    static KPoly zero() { return KPoly(); }
    static KPoly one() { return KPoly(Integer(1)); }
    /// The monomial kappa itself.
    static KPoly kappa();

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Integer& leading() const;
    /// Coefficient of kappa^i (zero beyond the stored range).
    const Integer& coeff(std::size_t i) const;
    const std::vector<Integer>& coeffs() const { return c_; }

    KPoly operator-() const;
    KPoly& operator+=(const KPoly& o);
    KPoly& operator-=(const KPoly& o);
    friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
    friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
    friend KPoly operator*(const KPoly& a, const KPoly& b);
    KPoly& operator*=(const KPoly& o) { return *this = *this * o; }
    friend bool operator==(const KPoly& a, const KPoly& b) { return a.c_ == b.c_; }

    void mul_int(const Integer& k);     // in place; k may be zero
    void divexact_int(const Integer& k);  // k must divide every coefficient

    /// gcd of the integer coefficients, always >= 0; 0 for the zero polynomial.
    Integer content() const;

    /// Greatest common divisor over Z (content times primitive gcd),
    /// normalized to positive leading coefficient.  gcd(0, 0) = 0.
    static KPoly gcd(const KPoly& a, const KPoly& b);

    /// Quotient of an exact division; throws Error when the division
    /// leaves a remainder.
    static KPoly divexact(const KPoly& a, const KPoly& b);

    Rational eval(const Rational& x) const;

    /// Human-readable form such as "k^2 + 3k - 1/..."; used in diagnostics.
    std::string str(const char* var = "k") const;

  private:
    void trim();
    std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream& os, const KPoly& p);

}  // namespace dunkl

#endif
