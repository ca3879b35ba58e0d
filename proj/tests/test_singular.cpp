#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/jack.hpp"
#include "dunkl/sampling.hpp"
#include "dunkl/singular.hpp"

using namespace dunkl;

TEST_CASE("is_singular verdicts") {
    const Polynomial a3 = alternating(3, 1);

    const Verdict good = is_singular(a3, DunklContext::specialized(3, Rational(-1, 2)));
    CHECK(good.singular);
    CHECK(good.nonzero);
    CHECK(good.residuals.empty());
    CHECK(good.degree == 3);
    CHECK(!good.degenerate_constant);

    const Verdict bad = is_singular(a3, DunklContext::specialized(3, Rational(1)));
    CHECK(!bad.singular);
    CHECK(bad.residuals.size() == 3);  // every operator leaves a residual

    const Verdict degenerate =
        is_singular(Polynomial::constant(3, Scalar(1)), DunklContext::specialized(3, Rational(1)));
    CHECK(degenerate.singular);
    CHECK(degenerate.degenerate_constant);

    const Verdict zero =
        is_singular(Polynomial::zero(3), DunklContext::specialized(3, Rational(1)));
    CHECK(!zero.singular);
    CHECK(!zero.nonzero);

    CHECK_THROWS_AS(is_singular(a3, DunklContext::generic(3)), DomainError);
    CHECK_THROWS_AS(is_singular(a3, DunklContext::specialized(4, Rational(1))),
                    DimensionMismatch);
}

TEST_CASE("singular value enumeration") {
    CHECK(singular_values(2, 3) == std::set<Rational>{Rational(-1, 2), Rational(-3, 2)});
    CHECK(singular_values(3, 2) ==
          std::set<Rational>{Rational(-1, 2), Rational(-1, 3), Rational(-2, 3)});
    for (const Rational& v : singular_values(6, 30)) {
        CHECK(!v.is_integer());
        CHECK(v < Rational(0));
    }
    CHECK_THROWS_AS(singular_values(1, 3), RangeError);
}

TEST_CASE("module rank") {
    const DunklContext ctx = DunklContext::specialized(3, Rational(-1, 2));

    const ModuleRank alt = module_rank(alternating(3, 1), ctx);
    CHECK(alt.rank == 1);
    REQUIRE(alt.euler_eigen.has_value());
    CHECK(*alt.euler_eigen == Scalar(0));  // 3 + (-1/2) * mu((1,1,1)) = 3 - 3

    Polynomial sym(3);
    for (int i = 1; i <= 3; ++i) sym += Polynomial::variable(3, i);
    CHECK(module_rank(sym, ctx).rank == 1);

    // x_1 spans the full permutation representation.
    CHECK(module_rank(Polynomial::variable(3, 1), ctx).rank == 3);

    CHECK_THROWS_AS(module_rank(Polynomial::zero(3), ctx), DomainError);
    CHECK_THROWS_AS(
        module_rank(Polynomial::variable(6, 1), DunklContext::specialized(6, Rational(1))),
        RangeError);
}

TEST_CASE("module rank identifies the isotype by dimension") {
    const Certificate cert = family_half(0, 2);
    const DunklContext ctx = DunklContext::specialized(5, cert.kappa);
    const ModuleRank mr = module_rank(cert.polynomial, ctx);
    CHECK(mr.rank == 6);  // binom(4, 2)
    REQUIRE(mr.euler_eigen.has_value());
    CHECK(*mr.euler_eigen == Scalar(0));
    REQUIRE(mr.isotype_candidates.size() == 1);
    CHECK(mr.isotype_candidates[0] == Partition({3, 1, 1}));
}

TEST_CASE("family omega_{n,0}") {
    const Certificate cert = family_n0(1, 2);
    CHECK(cert.ok());
    CHECK(cert.kappa == Rational(-1, 2));
    // omega_{1,0} at kappa = -1/2 is (x_1 - x_2)/2.
    Polynomial want = Polynomial::variable(2, 1) - Polynomial::variable(2, 2);
    want *= Scalar(Rational(1, 2));
    CHECK(cert.polynomial == want);

    CHECK(family_n0(2, 3).ok());
    CHECK(family_n0(2, 3).kappa == Rational(-2, 3));

    CHECK_THROWS_AS(family_n0(3, 3), DivisibilityError);
    CHECK_THROWS_AS(family_n0(4, 2), DivisibilityError);
    CHECK_THROWS_AS(family_n0(0, 3), RangeError);
}

TEST_CASE("family omega_{nn}") {
    const Certificate cert = family_nn(1, 4);
    CHECK(cert.ok());
    CHECK(cert.kappa == Rational(-1, 3));

    CHECK(family_nn(1, 5).ok());

    // gcd(N-1, n) = (N-1)/2 is the excluded boundary the half-integer
    // family fills.
    CHECK_THROWS_AS(family_nn(2, 5), GcdError);
    CHECK_THROWS_AS(family_nn(3, 4), GcdError);
    CHECK_THROWS_AS(family_nn(1, 3), RangeError);
}

TEST_CASE("family half") {
    const Certificate cert = family_half(0, 1);
    CHECK(cert.ok());
    CHECK(cert.N == 3);
    CHECK(cert.kappa == Rational(-1, 2));
    CHECK(cert.label == std::pair<long, long>{2, 1});
    CHECK(cert.degree == 3);
    REQUIRE(cert.antisymmetric_12.has_value());
    CHECK(*cert.antisymmetric_12);

    CHECK_THROWS_AS(family_half(-1, 1), RangeError);
    CHECK_THROWS_AS(family_half(0, 0), RangeError);
}

TEST_CASE("certificates are re-checkable from the serialized polynomial") {
    const Certificate cert = family_half(0, 1);
    const Json j = cert.to_json();

    // Schema fields present.
    for (const char* key : {"family", "params", "N", "kappa", "label", "degree", "checks",
                            "polynomial", "content_hash"})
        CHECK(j.contains(key));
    for (const char* key : {"dunkl_zero", "nonzero", "antisymmetric_12", "euler_match", "rank"})
        CHECK(j.at("checks").contains(key));

    // Re-run the verdict from the serialized polynomial alone.
    const Polynomial f = poly_from_json(j.at("polynomial"));
    const Rational kappa = Rational::parse(j.at("kappa").get<std::string>());
    const Verdict v = is_singular(f, DunklContext::specialized(j.at("N").get<int>(), kappa));
    CHECK(v.singular);
    CHECK(v.degree == j.at("degree").get<int>());
}

TEST_CASE("singular polynomials stay singular under the group") {
    const Certificate cert = family_half(0, 1);
    const DunklContext ctx = DunklContext::specialized(3, cert.kappa);
    for (const Permutation& w : Permutation::all(3))
        CHECK(is_singular(permute(w, cert.polynomial), ctx).singular);
}

TEST_CASE("certified kappas appear among the singular values") {
    for (const Certificate& cert :
         {family_n0(1, 3), family_nn(1, 4), family_half(0, 1), family_half(1, 1)}) {
        CHECK(singular_values(cert.N, 24).count(cert.kappa) == 1);
    }
}
