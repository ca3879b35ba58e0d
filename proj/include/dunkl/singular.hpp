#ifndef DUNKL_SINGULAR_HPP
#define DUNKL_SINGULAR_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/json_io.hpp"

namespace dunkl {

/// Outcome of applying every Dunkl operator to one polynomial at one
/// specialized kappa.
struct Verdict {
    bool singular = false;
    /// The nonzero residuals D_i f, keyed by i; absent keys mean zero.
    std::map<int, Polynomial> residuals;
    int degree = -1;
    bool nonzero = false;
    /// Constants are annihilated by every D_i; they satisfy the letter of
    /// the definition but carry no content, so they are flagged.
    bool degenerate_constant = false;
};

/// Applies D_1 ... D_N (in parallel when enabled) and reports which
/// vanish.  Requires a specialized context: a singular value is a
/// specific kappa.
Verdict is_singular(const Polynomial& f, const DunklContext& ctx);

/// The candidate singular values { -j/n : 2 <= n <= N, 1 <= j <= jmax,
/// n does not divide j }, deduplicated.
std::set<Rational> singular_values(int n_max, int j_max);

struct ModuleRank {
    int rank = 0;
    /// c with  sum_i x_i D_i f = c f, when f is such an eigenfunction.
    std::optional<Scalar> euler_eigen;
    /// All partitions tau with deg f + kappa mu(tau) equal to the
    /// eigenvalue; the rank disambiguates when several qualify.
    std::vector<Partition> isotype_candidates;
};

/// Exact dimension of span{ w f : w in S_N } by elimination over the
/// coefficient field.  Enumerates all N! permutations; refuses N > 5
/// unless allow_large is set.
ModuleRank module_rank(const Polynomial& f, const DunklContext& ctx, bool allow_large = false);

/// Machine-checkable record that a named polynomial is singular at a named
/// kappa.  Serializes with enough data (including the polynomial itself)
/// for an independent re-check.
struct Certificate {
    std::string family;
    std::vector<long> params;
    int N = 0;
    Rational kappa;
    std::pair<long, long> label;
    int degree = 0;
    std::vector<bool> dunkl_zero;           // per operator, index i-1
    bool nonzero = false;
    std::optional<bool> antisymmetric_12;   // only for the half-integer family
    bool euler_match = false;
    std::optional<int> rank;                // computed when N <= 5
    std::optional<int> expected_rank;
    Polynomial polynomial{1};

    /// Every applicable check passed.
    bool ok() const;
    Json to_json() const;
};

/// omega_{n,0} at kappa = -n/N.  Rejects N | n with DivisibilityError.
Certificate family_n0(long n, int N);

/// omega_{nn} at kappa = -n/(N-1) for N >= 4.  Rejects gcd(N-1, n) >=
/// (N-1)/2 with GcdError (the kappa = -j, -j+1/2 exclusions).
Certificate family_nn(long n, int N);

/// The half-integer family: omega_{(2l+1)(m+1), (2l+1)m} at
/// kappa = -l-1/2 with N = 2m+1; isotype (N-2,1,1).
Certificate family_half(long l, long m);

}  // namespace dunkl

#endif
