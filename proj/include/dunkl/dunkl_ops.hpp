#ifndef DUNKL_DUNKL_OPS_HPP
#define DUNKL_DUNKL_OPS_HPP

#include <vector>

#include "dunkl/context.hpp"
#include "dunkl/poly_ops.hpp"

namespace dunkl {

/// Partition of N: weakly decreasing positive parts.  Labels an S_N
/// isotype.
struct Partition {
    std::vector<int> parts;

    explicit Partition(std::vector<int> p);
    int n() const;  // the N it partitions
    std::string str() const;
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

/// All partitions of N in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// The Dunkl operator D_i:
///   D_i f = d f / d x_i + kappa * sum_{j != i} (f - (i,j)f)/(x_i - x_j).
/// Lowers homogeneous degree by exactly one.
Polynomial dunkl_apply(int i, const Polynomial& f, const DunklContext& ctx);
/// Reference single-thread implementation.
Polynomial dunkl_apply_serial(int i, const Polynomial& f, const DunklContext& ctx);

/// The Euler-Dunkl operator sum_i x_i D_i.  On a homogeneous polynomial of
/// isotype tau and degree n it acts as the scalar n + kappa * mu(tau).
Polynomial euler_dunkl(const Polynomial& f, const DunklContext& ctx);

/// Eigenvalue of sum_{i<j} (1 - (i,j)) on the isotype tau (Young's
/// formula): binom(N,2) - 1/2 sum_j tau_j (tau_j + 1 - 2j).
long mu(const Partition& tau);

/// Cherednik-type operator  D_i x_i - kappa sum_{j<i} (i,j)  applied to f;
/// the nonsymmetric Jack polynomials are its joint eigenfunctions.
Polynomial cherednik(int i, const Polynomial& f, const DunklContext& ctx);

/// a_N^power for odd power, where a_N = prod_{i<j} (x_i - x_j).  Even
/// powers are symmetric rather than alternating and are rejected.
Polynomial alternating(int n, int power);

}  // namespace dunkl

#endif
