#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/special.hpp"

using namespace dunkl;

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(6, -8) == Rational(-3, 4));
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(8, 4).str() == "2");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/ 2"), ParseError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("kappa polynomial gcd and exact division") {
    const KPoly k = KPoly::kappa();
    const KPoly a = (k + KPoly(Integer(1))) * (k + KPoly(Integer(2)));  // (k+1)(k+2)
    const KPoly b = (k + KPoly(Integer(1))) * KPoly(Integer(4));        // 4(k+1)
    const KPoly g = KPoly::gcd(a, b);
    CHECK(g == k + KPoly(Integer(1)));
    CHECK(KPoly::divexact(a, g) == k + KPoly(Integer(2)));
    CHECK_THROWS_AS(KPoly::divexact(k + KPoly(Integer(1)), k), Error);
    CHECK(KPoly::gcd(KPoly(Integer(6)), KPoly(Integer(-4))) == KPoly(Integer(2)));
}

TEST_CASE("scalar canonical form") {
    const Scalar k = Scalar::kappa();
    // (k^2 + k) / (k + 1) reduces to k.
    const Scalar s = (k * k + k) / (k + Scalar(1));
    CHECK(s == k);
    // Sign normalization: denominator leading coefficient positive.
    const Scalar t = Scalar(1) / (Scalar(0) - k);
    CHECK(t.den().leading() > 0);
    // Constants round-trip through Rational.
    const Scalar c = Scalar(Rational(-6, 8));
    CHECK(c.is_constant());
    CHECK(c.to_rational() == Rational(-3, 4));
    CHECK_THROWS_AS((k / (k + Scalar(1))).to_rational(), DomainError);
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DomainError);
}

TEST_CASE("scalar field axioms on sampled values") {
    const Scalar k = Scalar::kappa();
    const std::vector<Scalar> pool = {
        Scalar(2),       Scalar(Rational(-3, 7)), k,
        k + Scalar(1),   k * k - Scalar(2),       Scalar(1) / (k + Scalar(3)),
        (k - Scalar(5)) / (k * k + Scalar(1)),    -k * Scalar(Rational(1, 2))};
    for (const Scalar& a : pool)
        for (const Scalar& b : pool)
            for (const Scalar& c : pool) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
    for (const Scalar& a : pool) {
        CHECK(a + (-a) == Scalar(0));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar(1));
            CHECK(a / a == Scalar(1));
        }
    }
}

TEST_CASE("specialize") {
    const Scalar k = Scalar::kappa();
    CHECK((k * k + k).specialize(Rational(1, 2)) == Rational(3, 4));
    CHECK_THROWS_AS((Scalar(1) / (k + Scalar(1))).specialize(Rational(-1)), PoleError);
    CHECK(Scalar(7).specialize(Rational(123, 7)) == Rational(7));
}

TEST_CASE("pochhammer") {
    const Scalar k = Scalar::kappa();
    CHECK(pochhammer(k + Scalar(5), 0) == Scalar(1));
    CHECK(pochhammer(Scalar(2), 3) == Scalar(24));
    CHECK(pochhammer(k, 2) == k * k + k);
    CHECK(pochhammer(Rational(-1, 2), 2) == Rational(-1, 4));
}

TEST_CASE("pochhammer reversal and splitting") {
    const std::vector<Scalar> samples = {Scalar::kappa(), Scalar(Rational(2, 3)), Scalar(-4),
                                         Scalar::kappa() + Scalar(Rational(1, 2))};
    for (const Scalar& a : samples)
        for (unsigned long n = 0; n <= 6; ++n) {
            // (a - n)_n = (-1)^n (1 - a)_n
            Scalar lhs = pochhammer(a - Scalar(static_cast<long>(n)), n);
            Scalar rhs = pochhammer(Scalar(1) - a, n);
            if (n % 2 == 1) rhs = -rhs;
            CHECK(lhs == rhs);
            // (a)_m = (a)_{m-n} (a + m - n)_n for n <= m
            for (unsigned long m = n; m <= 6; ++m)
                CHECK(pochhammer(a, m) ==
                      pochhammer(a, m - n) * pochhammer(a + Scalar(static_cast<long>(m - n)), n));
        }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(10, 10) == 1);
}

TEST_CASE("terminating hypergeometric sums") {
    CHECK(hyp_terminating({}, {}, Scalar::kappa(), 0) == Scalar(1));

    // 2F1(-1, -1; -2; 2) = 1 - 1 = 0
    const std::vector<Scalar> numer = {Scalar(-1), Scalar(-1)};
    const std::vector<Scalar> denom = {Scalar(-2)};
    CHECK(hyp_terminating(numer, denom, Scalar(2), 1) == Scalar(0));

    // A vanishing denominator Pochhammer with a live numerator is an error.
    const std::vector<Scalar> bad_denom = {Scalar(0)};
    const std::vector<Scalar> one = {Scalar(1)};
    CHECK_THROWS_AS(hyp_terminating(one, bad_denom, Scalar(1), 1), DegenerateParameterError);

    // ... but a numerator that dies first silences the tail.
    const std::vector<Scalar> dead_numer = {Scalar(0)};
    CHECK(hyp_terminating(dead_numer, bad_denom, Scalar(1), 3) == Scalar(1));
}

namespace {

// The well-poised 5F4 from the 1^N evaluation, as a function of exact
// rational kappa; compares the sum against Dougall's closed form.
bool dougall_holds(int bigN, int m, int n, const Scalar& kappa) {
    const Scalar a(static_cast<long>(m - n));
    const Scalar half_a(Rational(m - n, 2));
    const std::vector<Scalar> numer = {a, half_a + Scalar(1), Scalar(-n), -kappa,
                                       kappa * Scalar(bigN) + Scalar(m + 1)};
    const std::vector<Scalar> denom = {half_a, Scalar(m + 1), kappa + Scalar(m - n + 1),
                                       -kappa * Scalar(bigN) - Scalar(n)};
    const Scalar sum = hyp_terminating(numer, denom, Scalar(1), static_cast<unsigned long>(n));
    const Scalar want =
        pochhammer(Scalar(m - n + 1), static_cast<unsigned long>(n)) *
        pochhammer(kappa * Scalar(1 - bigN) - Scalar(n), static_cast<unsigned long>(n)) /
        (pochhammer(kappa + Scalar(m - n + 1), static_cast<unsigned long>(n)) *
         pochhammer(-kappa * Scalar(bigN) - Scalar(n), static_cast<unsigned long>(n)));
    return sum == want;
}

}  // namespace

TEST_CASE("Dougall identity at sampled rational kappa") {
    // Negative samples keep denominators coprime to every N in range so no
    // (-N kappa - n)_j factor can vanish.
    const std::vector<Rational> kappas = {Rational(1, 3), Rational(-5, 7), Rational(2, 7),
                                          Rational(5, 2), Rational(-3, 8)};
    for (int bigN = 2; bigN <= 5; ++bigN)
        for (int m = 1; m <= 6; ++m)
            for (int n = 0; n < m; ++n)
                for (const Rational& kap : kappas)
                    CHECK(dougall_holds(bigN, m, n, Scalar(kap)));
}

TEST_CASE("Dougall identity at the spec's sample point") {
    CHECK(dougall_holds(3, 2, 1, Scalar(Rational(1, 3))));
    CHECK(dougall_holds(3, 2, 1, Scalar::kappa()));
}
