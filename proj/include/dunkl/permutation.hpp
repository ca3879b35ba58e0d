#ifndef DUNKL_PERMUTATION_HPP
#define DUNKL_PERMUTATION_HPP

#include <vector>

#include "dunkl/multi_index.hpp"

namespace dunkl {

/// Bijection of {1, ..., N}.  The API is 1-based to match the x_1 ... x_N
/// variable convention; storage is 0-based.
class Permutation {
  public:
    explicit Permutation(const std::vector<int>& images_1based);
    static Permutation identity(int n);
    /// The transposition (i, j), 1-based, i != j.
    static Permutation transposition(int n, int i, int j);

    int size() const { return static_cast<int>(img_.size()); }
    /// w(i), 1-based.
    int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)] + 1; }

    Permutation inverse() const;
    /// Composition: (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.img_ == b.img_;
    }

    /// Action on exponent vectors: (w a)_i = a_{w^{-1}(i)}.
    MultiIndex apply(const MultiIndex& a) const;

    /// All N! permutations in lexicographic order of their image vectors.
    static std::vector<Permutation> all(int n);

  private:
    Permutation() = default;
    std::vector<int> img_;  // img_[i] = w(i+1) - 1
};

}  // namespace dunkl

#endif
