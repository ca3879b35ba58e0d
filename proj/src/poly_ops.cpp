#include "dunkl/poly_ops.hpp"

namespace dunkl {

Polynomial permute(const Permutation& w, const Polynomial& f) {
    if (w.size() != f.nvars()) throw DimensionMismatch("permutation size != nvars");
    Polynomial r(f.nvars());
    for (const auto& [a, c] : f.terms()) r.add_term(w.apply(a), c);
    return r;
}

Polynomial transpose_vars(const Polynomial& f, int i, int j) {
    return permute(Permutation::transposition(f.nvars(), i, j), f);
}

Polynomial divided_difference(const Polynomial& f, int i, int j) {
    const int n = f.nvars();
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw IndexError("divided difference needs distinct indices in 1..N");
    Polynomial r(n);
    for (const auto& [alpha, c] : f.terms()) {
        const int a = alpha[i - 1];
        const int b = alpha[j - 1];
        if (a == b) continue;  // symmetric term, cancels exactly
        const int lo = std::min(a, b);
        const int hi = std::max(a, b);
        const Scalar signed_c = a > b ? c : -c;
        // (x_i^hi x_j^lo - x_i^lo x_j^hi)/(x_i - x_j)
        //   = x_i^lo x_j^lo * sum_{k=0}^{hi-lo-1} x_i^{hi-lo-1-k} x_j^k
        for (int k = 0; k < hi - lo; ++k) {
            MultiIndex beta = alpha.with(i - 1, lo + (hi - lo - 1 - k)).with(j - 1, lo + k);
            r.add_term(beta, signed_c);
        }
    }
    return r;
}

Polynomial partial(const Polynomial& f, int i) {
    const int n = f.nvars();
    if (i < 1 || i > n) throw IndexError("partial derivative index out of range");
    Polynomial r(n);
    for (const auto& [a, c] : f.terms()) {
        const int e = a[i - 1];
        if (e == 0) continue;
        r.add_term(a.with(i - 1, e - 1), c * Scalar(static_cast<long>(e)));
    }
    return r;
}

Polynomial specialize(const Polynomial& f, const Rational& k0) {
    Polynomial r(f.nvars());
    for (const auto& [a, c] : f.terms()) {
        const Rational v = c.specialize(k0);
        if (!v.is_zero()) r.add_term(a, Scalar(v));
    }
    return r;
}

}  // namespace dunkl
