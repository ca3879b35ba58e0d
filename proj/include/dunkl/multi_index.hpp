#ifndef DUNKL_MULTI_INDEX_HPP
#define DUNKL_MULTI_INDEX_HPP

#include <numeric>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl {

/// Exponent vector of a monomial: a fixed-length sequence of nonnegative
/// integers.  Ordered lexicographically (the term order used throughout).
class MultiIndex {
  public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
        for (int x : e_)
            if (x < 0) throw Error("negative exponent in multi-index");
    }
    static MultiIndex zeros(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    int size() const { return static_cast<int>(e_.size()); }
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    /// 0-based component access.
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return e_; }

    /// Copy with components i and j (0-based) swapped.
    MultiIndex swapped(int i, int j) const {
        MultiIndex r(*this);
        std::swap(r.e_[static_cast<std::size_t>(i)], r.e_[static_cast<std::size_t>(j)]);
        return r;
    }
    /// Copy with component i (0-based) set to v.
    MultiIndex with(int i, int v) const {
        MultiIndex r(*this);
        r.e_[static_cast<std::size_t>(i)] = v;
        return r;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.e_ < b.e_; }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        if (a.size() != b.size()) throw DimensionMismatch("multi-index length mismatch");
        MultiIndex r(a);
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

  private:
    std::vector<int> e_;
};

}  // namespace dunkl

#endif
