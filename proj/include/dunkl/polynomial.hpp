#ifndef DUNKL_POLYNOMIAL_HPP
#define DUNKL_POLYNOMIAL_HPP

#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "dunkl/multi_index.hpp"
#include "dunkl/scalar.hpp"

namespace dunkl {

/// Sparse multivariate polynomial over Q(kappa): a finite map from exponent
/// vectors to nonzero Scalars.  Terms are kept in ascending lexicographic
/// order of the exponent vector; no zero coefficient is ever stored.
class Polynomial {
  public:
    using TermMap = std::map<MultiIndex, Scalar>;

    explicit Polynomial(int nvars);
    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Scalar& c);
    static Polynomial monomial(MultiIndex a, Scalar c);
    /// The variable x_i, 1-based.
    static Polynomial variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Largest term degree; -1 for the zero polynomial.
    int total_degree() const;
    /// True when all stored terms share one degree (vacuously for zero).
    bool is_homogeneous() const;

    /// Coefficient of x^a (zero Scalar when absent).
    Scalar coeff(const MultiIndex& a) const;

    /// Adds c * x^a, merging and dropping a cancelled term.
    void add_term(const MultiIndex& a, const Scalar& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    /// *this += c * o without materializing an intermediate polynomial.
    Polynomial& add_scaled(const Polynomial& o, const Scalar& c);
    Polynomial& operator*=(const Scalar& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Product, dispatching to the OpenMP kernel when the global thread
    /// setting allows and the operands are large enough to pay for it.
    static Polynomial mul(const Polynomial& a, const Polynomial& b);
    /// Reference kernel: plain term-by-term accumulation.
    static Polynomial mul_serial(const Polynomial& a, const Polynomial& b);
    /// OpenMP kernel: chunks one operand over threads, merges the partial
    /// maps.  Bit-identical to mul_serial for every input.
    static Polynomial mul_parallel(const Polynomial& a, const Polynomial& b, int jobs = 0);

    /// Substitutes an exact rational point; the result still carries kappa
    /// in generic mode.
    Scalar evaluate(std::span<const Rational> point) const;

    /// Multiplication by the single variable x_i (1-based).
    Polynomial times_variable(int i) const;

    std::string str() const;

  private:
    int nvars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace dunkl

#endif
