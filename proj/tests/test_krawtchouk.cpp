#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/krawtchouk.hpp"
#include "dunkl/special.hpp"

using namespace dunkl;

TEST_CASE("krawtchouk values") {
    // Normalization at t = 0.
    for (int n = 1; n <= 8; ++n)
        for (int m = 0; m <= n; ++m) CHECK(krawtchouk(m, Rational(0), n) == Rational(1));

    // K_1(t; n) = 1 - 2t/n.
    CHECK(krawtchouk(1, Rational(1), 2) == Rational(0));
    CHECK(krawtchouk(1, Rational(1, 2), 2) == Rational(1, 2));

    // Parity instance: K_2(3; 4) = (-1)^2 K_2(1; 4).
    CHECK(krawtchouk(2, Rational(3), 4) == krawtchouk(2, Rational(1), 4));

    CHECK_THROWS_AS(krawtchouk(5, Rational(0), 4), RangeError);
    CHECK_THROWS_AS(krawtchouk(-1, Rational(0), 4), RangeError);
}

TEST_CASE("q polynomials at low degree") {
    const DunklContext ctx = DunklContext::generic(3);
    JackBasis basis(ctx);
    CHECK(q_poly(0, 0, basis) == Polynomial::constant(3, Scalar(1)));
    CHECK(q_poly(1, 0, basis) == basis.p(1, 0) + basis.p(0, 1));
    CHECK(q_poly(0, 1, basis) == basis.p(1, 0) - basis.p(0, 1));
}

TEST_CASE("q_{2,0} vanishes at N = 3, kappa = -1/2") {
    // The l = 0, n = 0 instance of the vanishing region m+n >= N(2l+1)-1.
    const DunklContext ctx = DunklContext::specialized(3, Rational(-1, 2));
    CHECK(q_poly(2, 0, ctx).is_zero());
    CHECK(q_poly(3, 0, ctx).is_zero());
    // Just below the threshold the polynomial survives.
    CHECK(!q_poly(1, 0, ctx).is_zero());
}

TEST_CASE("p to q transform") {
    const std::vector<Scalar> c = {Scalar(1), Scalar(0)};
    const std::vector<Scalar> d = p_to_q(c);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == Scalar(Rational(1, 2)));
    CHECK(d[1] == Scalar(Rational(1, 2)));

    const std::vector<Scalar> zeros(5, Scalar(0));
    for (const Scalar& v : p_to_q(zeros)) CHECK(v.is_zero());

    // Round trip through q_poly on a mixed combination.
    const DunklContext ctx = DunklContext::specialized(3, Rational(1, 3));
    JackBasis basis(ctx);
    const std::vector<Scalar> coeffs = {Scalar(2), Scalar(-1), Scalar(0), Scalar(5)};
    const std::vector<Scalar> qc = p_to_q(coeffs);
    Polynomial f(3), g(3);
    for (int i = 0; i <= 3; ++i) {
        f.add_scaled(basis.p(3 - i, i), coeffs[static_cast<std::size_t>(i)]);
        g.add_scaled(q_poly(3 - i, i, basis), qc[static_cast<std::size_t>(i)]);
    }
    CHECK(f == g);
}

TEST_CASE("A and B series expansions") {
    const DunklContext generic = DunklContext::generic(2);

    // A_0(u; kappa) = 1 + 2k u + (k + 2k^2) u^2 + ...
    const UnivariateSeries a0 = ab_series(ABKind::A, 0, generic, 2);
    const Scalar k = Scalar::kappa();
    CHECK(a0.coeff(0) == Scalar(1));
    CHECK(a0.coeff(1) == Scalar(2) * k);
    CHECK(a0.coeff(2) == k + Scalar(2) * k * k);

    // At kappa = -1/2: A_0 = 1 - u exactly.
    const DunklContext half = DunklContext::specialized(2, Rational(-1, 2));
    const UnivariateSeries a0h = ab_series(ABKind::A, 0, half, 4);
    CHECK(a0h.coeff(0) == Scalar(1));
    CHECK(a0h.coeff(1) == Scalar(-1));
    CHECK(a0h.coeff(2).is_zero());
    CHECK(a0h.coeff(3).is_zero());

    // A_n = 0 for odd n at half-integer kappa.
    for (int l = 1; l <= 3; ++l) {
        const DunklContext ctx = DunklContext::specialized(2, Rational(-(2 * l + 1), 2));
        for (int n = 1; n <= 2 * l; n += 2) {
            const UnivariateSeries an = ab_series(ABKind::A, n, ctx, 2 * l + 2);
            CHECK(an.degree() == -1);
        }
    }

    // B_0(u; -1/2) = 1.
    const UnivariateSeries b0 = ab_series(ABKind::B, 0, half, 3);
    CHECK(b0.coeff(0) == Scalar(1));
    CHECK(b0.degree() == 0);
}

TEST_CASE("A and B closed forms") {
    // (A, 0, 0) -> 1 - u.
    const UnivariateSeries a00 = ab_closed(ABKind::A, 0, 0);
    CHECK(a00.coeff(0) == Scalar(1));
    CHECK(a00.coeff(1) == Scalar(-1));
    CHECK(a00.degree() == 1);

    // (B, 2, 1) -> (-1/2)_1 / 1! (1-u)^0 = -1/2.
    const UnivariateSeries b21 = ab_closed(ABKind::B, 2, 1);
    CHECK(b21.degree() == 0);
    CHECK(b21.coeff(0) == Scalar(Rational(-1, 2)));

    CHECK_THROWS_AS(ab_closed(ABKind::A, 3, 1), RangeError);
    CHECK_THROWS_AS(ab_closed(ABKind::B, 5, 2), RangeError);

    // Closed forms agree with the bivariate expansion, including the zero
    // coefficients past the stated degree.
    for (int l = 0; l <= 3; ++l) {
        const DunklContext ctx = DunklContext::specialized(2, Rational(-(2 * l + 1), 2));
        for (int n = 0; n <= 2 * l; ++n)
            for (ABKind kind : {ABKind::A, ABKind::B}) {
                const UnivariateSeries closed = ab_closed(kind, n, l);
                const UnivariateSeries series = ab_series(kind, n, ctx, closed.truncation + 3);
                CHECK(series == closed);
            }
    }
}
