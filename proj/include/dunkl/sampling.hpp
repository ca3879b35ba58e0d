#ifndef DUNKL_SAMPLING_HPP
#define DUNKL_SAMPLING_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dunkl/polynomial.hpp"

namespace dunkl {

/// Deterministic sampler for the randomized suites: sparse polynomials
/// with small integer coefficients (the counterexample, if any, stays
/// reproducible from the seed alone).
class PolySampler {
  public:
    explicit PolySampler(std::uint64_t seed) : rng_(seed) {}

    /// Nonzero sparse polynomial, coefficients in {-3..3} \ {0}.
    Polynomial random_poly(int nvars, int max_degree, int max_terms = 6);
    /// Nonzero homogeneous sparse polynomial of the exact degree.
    Polynomial random_homogeneous(int nvars, int degree, int max_terms = 6);

    std::uint64_t raw() { return rng_(); }

  private:
    MultiIndex random_index(int nvars, int degree);
    std::mt19937_64 rng_;
};

/// The first `count` rationals with small numerator and denominator that
/// pass the filter; used to sample kappa away from excluded sets.
std::vector<Rational> sample_kappas(int count, const std::function<bool(const Rational&)>& keep);

}  // namespace dunkl

#endif
