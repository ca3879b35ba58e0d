#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/sampling.hpp"

using namespace dunkl;

namespace {
Polynomial x(int nvars, int i) { return Polynomial::variable(nvars, i); }
}  // namespace

TEST_CASE("dunkl operator on simple inputs") {
    const DunklContext ctx = DunklContext::generic(4);
    const Scalar k = Scalar::kappa();

    CHECK(dunkl_apply(1, Polynomial::constant(4, Scalar(1)), ctx).is_zero());

    // D_1 x_1 = 1 + (N-1) kappa: every difference quotient is 1.
    CHECK(dunkl_apply(1, x(4, 1), ctx) ==
          Polynomial::constant(4, Scalar(1) + Scalar(3) * k));

    // Symmetric input kills every difference term.
    Polynomial sym(4);
    for (int i = 1; i <= 4; ++i) sym += x(4, i);
    CHECK(dunkl_apply(1, sym, ctx) == Polynomial::constant(4, Scalar(1)));

    CHECK_THROWS_AS(dunkl_apply(5, sym, ctx), IndexError);
    CHECK_THROWS_AS(dunkl_apply(1, Polynomial::zero(3), ctx), DimensionMismatch);
}

TEST_CASE("dunkl lowers homogeneous degree by one") {
    PolySampler sampler(17);
    const DunklContext ctx = DunklContext::generic(3);
    for (int t = 0; t < 20; ++t) {
        const Polynomial f = sampler.random_homogeneous(3, 5);
        for (int i = 1; i <= 3; ++i) {
            const Polynomial df = dunkl_apply(i, f, ctx);
            if (df.is_zero()) continue;
            CHECK(df.is_homogeneous());
            CHECK(df.total_degree() == 4);
        }
    }
}

TEST_CASE("dunkl operators commute") {
    PolySampler sampler(29);
    for (int nvars = 3; nvars <= 5; ++nvars) {
        const DunklContext ctx = DunklContext::generic(nvars);
        for (int t = 0; t < 10; ++t) {
            const Polynomial f = sampler.random_poly(nvars, 5);
            for (int i = 1; i <= nvars; ++i)
                for (int j = i + 1; j <= nvars; ++j)
                    CHECK(dunkl_apply(i, dunkl_apply(j, f, ctx), ctx) == dunkl_apply(j, dunkl_apply(i, f, ctx), ctx));
        }
    }
}

TEST_CASE("euler-dunkl operator") {
    const DunklContext ctx = DunklContext::generic(3);
    CHECK(euler_dunkl(Polynomial::constant(3, Scalar(7)), ctx).is_zero());

    Polynomial sym(3);
    for (int i = 1; i <= 3; ++i) sym += x(3, i);
    CHECK(euler_dunkl(sym, ctx) == sym);  // degree 1, trivial isotype: eigenvalue 1

    // a_N: degree N(N-1)/2, isotype (1^N), eigenvalue deg + kappa N(N-1).
    for (int n : {2, 3, 4}) {
        const DunklContext c = DunklContext::generic(n);
        const Polynomial a = alternating(n, 1);
        Polynomial want = a;
        want *= Scalar(static_cast<long>(n) * (n - 1) / 2) +
                Scalar::kappa() * Scalar(static_cast<long>(n) * (n - 1));
        CHECK(euler_dunkl(a, c) == want);
    }
}

TEST_CASE("euler decomposition") {
    PolySampler sampler(31);
    const DunklContext ctx = DunklContext::generic(4);
    const Scalar k = Scalar::kappa();
    for (int t = 0; t < 10; ++t) {
        const Polynomial f = sampler.random_poly(4, 4);
        Polynomial rhs(4);
        for (int i = 1; i <= 4; ++i) rhs += partial(f, i).times_variable(i);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) {
                rhs.add_scaled(f, k);
                rhs.add_scaled(transpose_vars(f, i, j), -k);
            }
        CHECK(euler_dunkl(f, ctx) == rhs);
    }
}

TEST_CASE("product rule") {
    PolySampler sampler(37);
    const DunklContext ctx = DunklContext::generic(3);
    const Scalar k = Scalar::kappa();
    for (int t = 0; t < 10; ++t) {
        const Polynomial f = sampler.random_poly(3, 3);
        const Polynomial g = sampler.random_poly(3, 3);
        for (int i = 1; i <= 3; ++i) {
            Polynomial rhs = f * dunkl_apply(i, g, ctx);
            rhs += partial(f, i) * g;
            for (int j = 1; j <= 3; ++j) {
                if (j == i) continue;
                rhs.add_scaled(divided_difference(f, i, j) * transpose_vars(g, i, j), k);
            }
            CHECK(dunkl_apply(i, f * g, ctx) == rhs);
        }
    }
}

TEST_CASE("mu eigenvalues by Young's formula") {
    CHECK(mu(Partition({4, 1})) == 5);
    CHECK(mu(Partition({3, 1, 1})) == 10);
    CHECK(mu(Partition({3, 2})) == 8);
    CHECK(mu(Partition({5})) == 0);
    CHECK(mu(Partition({1, 1, 1, 1, 1})) == 20);
    CHECK(mu(Partition({1, 1})) == 2);
    CHECK_THROWS_AS(Partition({1, 2}), InvalidPartition);
    CHECK_THROWS_AS(Partition({2, 0}), InvalidPartition);
    CHECK_THROWS_AS(Partition({}), InvalidPartition);
    CHECK(partitions_of(5).size() == 7);
}

TEST_CASE("cherednik operator") {
    const Scalar k = Scalar::kappa();
    for (int n : {3, 5}) {
        const DunklContext ctx = DunklContext::generic(n);
        // On the constant 1: D_1 x_1 1 = (1 + (N-1) kappa) 1, matching the
        // omega eigenvalue (N-1)kappa + m + 1 at m = 0.
        CHECK(cherednik(1, Polynomial::constant(n, Scalar(1)), ctx) ==
              Polynomial::constant(n, Scalar(1) + Scalar(static_cast<long>(n - 1)) * k));
    }
    CHECK_THROWS_AS(cherednik(0, Polynomial::zero(3), DunklContext::generic(3)), IndexError);
}

TEST_CASE("alternating polynomial") {
    CHECK(alternating(2, 1) == x(2, 1) - x(2, 2));
    CHECK(alternating(3, 1).total_degree() == 3);
    CHECK(alternating(3, 3).total_degree() == 9);
    CHECK(alternating(4, 1).is_homogeneous());

    // (i,j) a_N = -a_N.
    const Polynomial a = alternating(4, 1);
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) CHECK(transpose_vars(a, i, j) == -a);

    CHECK_THROWS_AS(alternating(3, 2), EvenPowerError);
    CHECK_THROWS_AS(alternating(3, 0), EvenPowerError);
    CHECK_THROWS_AS(alternating(1, 1), RangeError);
}

TEST_CASE("alternating identity in polynomial form") {
    // (2l+1) D_i a^{2l+1} = (2l+1+2 kappa) d/dx_i a^{2l+1}
    for (const auto& [n, l] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {3, 1}, {4, 0}}) {
        const DunklContext ctx = DunklContext::generic(n);
        const Polynomial a = alternating(n, 2 * l + 1);
        for (int i = 1; i <= n; ++i) {
            Polynomial lhs = dunkl_apply(i, a, ctx);
            lhs *= Scalar(2 * l + 1);
            Polynomial rhs = partial(a, i);
            rhs *= Scalar(2 * l + 1) + Scalar(2) * Scalar::kappa();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("specialized mode matches generic specialization") {
    PolySampler sampler(41);
    const Rational k0(-2, 3);
    const DunklContext g = DunklContext::generic(3);
    const DunklContext s = DunklContext::specialized(3, k0);
    for (int t = 0; t < 10; ++t) {
        const Polynomial f = sampler.random_poly(3, 4);
        for (int i = 1; i <= 3; ++i)
            CHECK(specialize(dunkl_apply(i, f, g), k0) == dunkl_apply(i, f, s));
    }
}
