#include "dunkl/permutation.hpp"

#include <algorithm>

namespace dunkl {

Permutation::Permutation(const std::vector<int>& images_1based) {
    const int n = static_cast<int>(images_1based.size());
    img_.resize(images_1based.size());
    std::vector<bool> seen(images_1based.size(), false);
    for (std::size_t i = 0; i < images_1based.size(); ++i) {
        const int v = images_1based[i];
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw Error("image sequence is not a bijection of {1..N}");
        seen[static_cast<std::size_t>(v - 1)] = true;
        img_[i] = v - 1;
    }
}

Permutation Permutation::identity(int n) {
    Permutation w;
    w.img_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w.img_[static_cast<std::size_t>(i)] = i;
    return w;
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw IndexError("invalid transposition indices");
    Permutation w = identity(n);
    std::swap(w.img_[static_cast<std::size_t>(i - 1)], w.img_[static_cast<std::size_t>(j - 1)]);
    return w;
}

Permutation Permutation::inverse() const {
    Permutation w;
    w.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
        w.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    return w;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw DimensionMismatch("permutation size mismatch");
    Permutation w;
    w.img_.resize(a.img_.size());
    for (std::size_t i = 0; i < a.img_.size(); ++i)
        w.img_[i] = a.img_[static_cast<std::size_t>(b.img_[i])];
    return w;
}

MultiIndex Permutation::apply(const MultiIndex& a) const {
    if (a.size() != size()) throw DimensionMismatch("multi-index length != permutation size");
    std::vector<int> r(img_.size());
    // (w a)_{w(i)} = a_i
    for (std::size_t i = 0; i < img_.size(); ++i) r[static_cast<std::size_t>(img_[i])] = a[static_cast<int>(i)];
    return MultiIndex(std::move(r));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace dunkl
