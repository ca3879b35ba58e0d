#include "dunkl/sampling.hpp"

#include <algorithm>

namespace dunkl {

MultiIndex PolySampler::random_index(int nvars, int degree) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    std::uniform_int_distribution<int> var(0, nvars - 1);
    for (int u = 0; u < degree; ++u) e[static_cast<std::size_t>(var(rng_))] += 1;
    return MultiIndex(std::move(e));
}

Polynomial PolySampler::random_poly(int nvars, int max_degree, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(1, 6);
    for (;;) {
        Polynomial f(nvars);
        const int t = nterms(rng_);
        for (int k = 0; k < t; ++k) {
            const int c = coef(rng_);  // 1..6 -> {-3,..,-1,1,..,3}
            f.add_term(random_index(nvars, deg(rng_)), Scalar(c <= 3 ? c : 3 - c));
        }
        if (!f.is_zero()) return f;  // merged terms may cancel; resample
    }
}

Polynomial PolySampler::random_homogeneous(int nvars, int degree, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coef(1, 6);
    for (;;) {
        Polynomial f(nvars);
        const int t = nterms(rng_);
        for (int k = 0; k < t; ++k) {
            const int c = coef(rng_);
            f.add_term(random_index(nvars, degree), Scalar(c <= 3 ? c : 3 - c));
        }
        if (!f.is_zero()) return f;
    }
}

std::vector<Rational> sample_kappas(int count,
                                    const std::function<bool(const Rational&)>& keep) {
    std::vector<Rational> out;
    // Small numerators over small denominators, alternating sign.
    for (int q = 2; static_cast<int>(out.size()) < count && q <= 64; ++q) {
        for (int p = 1; static_cast<int>(out.size()) < count && p <= 2 * q; ++p) {
            for (int sign : {+1, -1}) {
                if (static_cast<int>(out.size()) >= count) break;
                const Rational k(sign * p, q);
                if (k.is_integer()) continue;
                if (std::find(out.begin(), out.end(), k) != out.end()) continue;
                if (keep(k)) out.push_back(k);
            }
        }
    }
    if (static_cast<int>(out.size()) < count)
        throw Error("could not sample enough kappa values");
    return out;
}

}  // namespace dunkl
