// The OpenMP kernels must be bit-identical to the serial reference: exact
// arithmetic plus canonical merge order leaves no room for divergence.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/jack.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/sampling.hpp"
#include "dunkl/verify.hpp"

using namespace dunkl;

TEST_CASE("thread setting") {
    set_max_threads(3);
    CHECK(max_threads() == 3);
    set_max_threads(0);
    CHECK(max_threads() >= 1);
}

TEST_CASE("parallel product equals serial product") {
    PolySampler sampler(101);
    for (int t = 0; t < 6; ++t) {
        const Polynomial a = sampler.random_poly(4, 6, 30);
        const Polynomial b = sampler.random_poly(4, 6, 30);
        const Polynomial serial = Polynomial::mul_serial(a, b);
        for (int jobs : {1, 2, 3, 8})
            CHECK(Polynomial::mul_parallel(a, b, jobs) == serial);
    }
    // Dense case: alternating polynomials.
    const Polynomial a5 = alternating(5, 1);
    CHECK(Polynomial::mul_parallel(a5, a5, 4) == Polynomial::mul_serial(a5, a5));
}

TEST_CASE("parallel dunkl equals serial dunkl") {
    const DunklContext ctx = DunklContext::specialized(3, Rational(-3, 2));
    const Polynomial w = omega(4, 2, ctx);
    for (int i = 1; i <= 3; ++i) {
        const Polynomial serial = dunkl_apply_serial(i, w, ctx);
        set_max_threads(4);
        CHECK(dunkl_apply(i, w, ctx) == serial);
        set_max_threads(0);
    }
}

TEST_CASE("suite reports are independent of the thread count") {
    VerifyConfig cfg;
    cfg.N = 3;
    cfg.max_degree = 3;
    cfg.samples = 10;

    cfg.jobs = 1;
    const SuiteReport serial = verify_commute(cfg);
    cfg.jobs = 4;
    const SuiteReport parallel = verify_commute(cfg);

    REQUIRE(serial.cases.size() == parallel.cases.size());
    for (std::size_t i = 0; i < serial.cases.size(); ++i) {
        CHECK(serial.cases[i].key == parallel.cases[i].key);
        CHECK(serial.cases[i].pass == parallel.cases[i].pass);
        CHECK(serial.cases[i].detail == parallel.cases[i].detail);
    }
}
