#include "dunkl/special.hpp"

namespace dunkl {

Scalar pochhammer(const Scalar& a, unsigned long n) {
    Scalar r(1);
    Scalar factor(a);
    for (unsigned long i = 0; i < n; ++i) {
        r *= factor;
        factor += Scalar(1);
    }
    return r;
}

Rational pochhammer(const Rational& a, unsigned long n) {
    Rational r(1);
    Rational factor(a);
    for (unsigned long i = 0; i < n; ++i) {
        r *= factor;
        factor += Rational(1);
    }
    return r;
}

Integer binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Scalar hyp_terminating(std::span<const Scalar> numer_params,
                       std::span<const Scalar> denom_params, const Scalar& z,
                       unsigned long k_max) {
    Scalar sum(1);  // j = 0 term
    // Running products prod (a_i)_j * z^j and prod (b_i)_j * j!.  Once the
    // numerator product hits zero it stays zero, so the remaining terms
    // vanish regardless of the denominators.
    Scalar num_prod(1), den_prod(1);
    for (unsigned long j = 1; j <= k_max; ++j) {
        if (!num_prod.is_zero()) {
            for (const Scalar& a : numer_params) num_prod *= a + Scalar(static_cast<long>(j) - 1);
            num_prod *= z;
        }
        if (num_prod.is_zero()) break;
        Scalar den_step(static_cast<long>(j));
        for (const Scalar& b : denom_params) den_step *= b + Scalar(static_cast<long>(j) - 1);
        if (den_step.is_zero())
            throw DegenerateParameterError(
                "denominator Pochhammer vanishes identically at term j = " + std::to_string(j));
        den_prod *= den_step;
        sum += num_prod / den_prod;
    }
    return sum;
}

}  // namespace dunkl
