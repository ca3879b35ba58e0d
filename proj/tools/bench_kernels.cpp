// Compares the serial reference kernels against the OpenMP ones on the
// hot paths (polynomial products, Dunkl applications, suite sweeps) and
// checks that both produce identical results while timing them.

#include <chrono>
#include <iostream>
#include <string>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/jack.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class Fn>
double timed(Fn&& fn) {
    const auto t0 = Clock::now();
    fn();
    return seconds_since(t0);
}

void report(const std::string& name, double serial, double parallel, bool same) {
    std::cout << name << ": serial " << serial << " s, parallel " << parallel << " s, speedup "
              << (parallel > 0 ? serial / parallel : 0.0) << (same ? "" : "  RESULTS DIFFER")
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = 0;
    if (argc > 1) jobs = std::stoi(argv[1]);
    dunkl::set_max_threads(jobs > 0 ? jobs : 0);
    std::cout << "threads: " << dunkl::max_threads() << "\n";

    // Kernel 1: product of two dense homogeneous polynomials (the p-series
    // workload).
    {
        const dunkl::Polynomial a = dunkl::alternating(5, 1);
        const dunkl::Polynomial b = a;
        dunkl::Polynomial r_serial(5), r_parallel(5);
        const double ts = timed([&] { r_serial = dunkl::Polynomial::mul_serial(a, b); });
        const double tp =
            timed([&] { r_parallel = dunkl::Polynomial::mul_parallel(a, b, jobs); });
        report("poly-mul a_5 * a_5", ts, tp, r_serial == r_parallel);
    }

    // Kernel 2: Dunkl operator on a large singular polynomial.
    {
        const dunkl::DunklContext ctx =
            dunkl::DunklContext::specialized(3, dunkl::Rational(-3, 2));
        const dunkl::Polynomial w = dunkl::omega(6, 3, ctx);
        dunkl::Polynomial r_serial(3), r_parallel(3);
        const double ts = timed([&] { r_serial = dunkl::dunkl_apply_serial(1, w, ctx); });
        dunkl::set_max_threads(jobs > 0 ? jobs : 0);
        const double tp = timed([&] { r_parallel = dunkl::dunkl_apply(1, w, ctx); });
        report("dunkl D_1 omega_{6,3}", ts, tp, r_serial == r_parallel);
    }

    // Kernel 3: a whole verification sweep, parallel over cases.
    {
        dunkl::VerifyConfig cfg;
        cfg.N = 3;
        cfg.max_degree = 4;
        cfg.samples = 40;
        cfg.jobs = 1;
        dunkl::SuiteReport serial_rep, parallel_rep;
        const double ts = timed([&] { serial_rep = dunkl::verify_commute(cfg); });
        cfg.jobs = jobs > 0 ? jobs : dunkl::max_threads();
        const double tp = timed([&] { parallel_rep = dunkl::verify_commute(cfg); });
        bool same = serial_rep.cases.size() == parallel_rep.cases.size();
        for (std::size_t i = 0; same && i < serial_rep.cases.size(); ++i)
            same = serial_rep.cases[i].key == parallel_rep.cases[i].key &&
                   serial_rep.cases[i].pass == parallel_rep.cases[i].pass;
        report("verify-commute sweep", ts, tp, same);
    }

    return 0;
}
