#include "dunkl/jack.hpp"

#include "dunkl/special.hpp"

namespace dunkl {

namespace {

void check_label(int m, int n) {
    if (m < 0 || n < 0) throw RangeError("polynomial labels must be nonnegative");
}

// Truncated product of univariate series with Polynomial coefficients:
// acc <- acc * other, degrees above `deg` discarded.
void series_mul(std::vector<Polynomial>& acc, const std::vector<Polynomial>& other, int deg,
                int nvars) {
    std::vector<Polynomial> out(static_cast<std::size_t>(deg) + 1, Polynomial(nvars));
    for (int a = 0; a <= deg; ++a) {
        if (acc[static_cast<std::size_t>(a)].is_zero()) continue;
        for (int b = 0; a + b <= deg; ++b)
            out[static_cast<std::size_t>(a + b)] +=
                Polynomial::mul(acc[static_cast<std::size_t>(a)], other[static_cast<std::size_t>(b)]);
    }
    acc = std::move(out);
}

}  // namespace

JackBasis::JackBasis(DunklContext ctx) : ctx_(std::move(ctx)) {}

void JackBasis::ensure_series(int deg) {
    if (static_cast<int>(fc_.size()) > deg) return;
    const int n = ctx_.N;
    const Scalar kappa = ctx_.kappa_scalar();

    // Geometric factor (1 - s x_1)^{-1}: coefficient x_1^k at s^k.
    std::vector<Polynomial> f;
    f.reserve(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k)
        f.push_back(Polynomial::monomial(MultiIndex::zeros(n).with(0, k), Scalar(1)));

    // Negative binomial series (1 - s x_i)^{-kappa}: (kappa)_k / k! x_i^k.
    std::vector<Scalar> w(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k)
        w[static_cast<std::size_t>(k)] = pochhammer(kappa, static_cast<unsigned long>(k)) /
                                         Scalar(factorial(static_cast<unsigned long>(k)));
    for (int i = 1; i <= n; ++i) {
        std::vector<Polynomial> factor;
        factor.reserve(static_cast<std::size_t>(deg) + 1);
        for (int k = 0; k <= deg; ++k)
            factor.push_back(Polynomial::monomial(MultiIndex::zeros(n).with(i - 1, k),
                                                  w[static_cast<std::size_t>(k)]));
        series_mul(f, factor, deg, n);
    }

    fc_ = std::move(f);
    gc_.clear();
    gc_.reserve(fc_.size());
    for (const auto& c : fc_) gc_.push_back(transpose_vars(c, 1, 2));
}

const Polynomial& JackBasis::p_locked(int m, int n) {
    check_label(m, n);
    auto it = pcache_.find({m, n});
    if (it != pcache_.end()) return it->second;
    ensure_series(std::max(m, n));
    Polynomial prod = Polynomial::mul(fc_[static_cast<std::size_t>(m)],
                                      gc_[static_cast<std::size_t>(n)]);
    return pcache_.emplace(std::make_pair(m, n), std::move(prod)).first->second;
}

const Polynomial& JackBasis::p(int m, int n) {
    std::lock_guard<std::mutex> lock(mu_);
    return p_locked(m, n);
}

std::vector<Scalar> JackBasis::omega_p_coeffs(int m, int n) const {
    check_label(m, n);
    const int d = m + n;
    if (m < n) {
        // omega_{mn} = (1,2) omega_{nm} and (1,2) p_{ab} = p_{ba}: the
        // coefficient vector simply reverses.
        std::vector<Scalar> c = omega_p_coeffs(n, m);
        std::reverse(c.begin(), c.end());
        return c;
    }
    const Scalar kappa = ctx_.kappa_scalar();
    std::vector<Scalar> c(static_cast<std::size_t>(d) + 1);
    c[static_cast<std::size_t>(n)] = Scalar(1);  // p_{mn} itself
    for (int j = 1; j <= n; ++j) {
        const Scalar den = pochhammer(kappa + Scalar(m - n + 1), static_cast<unsigned long>(j));
        if (den.is_zero())
            throw PoleError("omega_{" + std::to_string(m) + "," + std::to_string(n) +
                            "} has a pole at kappa = " + ctx_.kappa->str());
        const Scalar a = pochhammer(-kappa, static_cast<unsigned long>(j)) *
                         pochhammer(Scalar(m - n + 1), static_cast<unsigned long>(j - 1)) /
                         (den * Scalar(factorial(static_cast<unsigned long>(j))));
        // (m-n+j) p_{m+j, n-j} + j p_{n-j, m+j}
        c[static_cast<std::size_t>(n - j)] += a * Scalar(static_cast<long>(m - n + j));
        c[static_cast<std::size_t>(m + j)] += a * Scalar(static_cast<long>(j));
    }
    return c;
}

const Polynomial& JackBasis::omega(int m, int n) {
    check_label(m, n);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ocache_.find({m, n});
    if (it != ocache_.end()) return it->second;
    Polynomial w(ctx_.N);
    if (m < n) {
        // Definition: omega_{nm} = (1,2) omega_{mn}.
        auto big = ocache_.find({n, m});
        if (big == ocache_.end()) {
            const std::vector<Scalar> c = omega_p_coeffs(n, m);
            Polynomial base(ctx_.N);
            for (int j = 0; j <= n + m; ++j)
                base.add_scaled(p_locked(n + m - j, j), c[static_cast<std::size_t>(j)]);
            big = ocache_.emplace(std::make_pair(n, m), std::move(base)).first;
        }
        w = transpose_vars(big->second, 1, 2);
    } else {
        const std::vector<Scalar> c = omega_p_coeffs(m, n);
        for (int j = 0; j <= m + n; ++j)
            w.add_scaled(p_locked(m + n - j, j), c[static_cast<std::size_t>(j)]);
    }
    return ocache_.emplace(std::make_pair(m, n), std::move(w)).first->second;
}

Scalar JackBasis::omega_at_ones(int m, int n) const {
    check_label(m, n);
    if (m < n) std::swap(m, n);  // evaluation at 1^N is permutation-invariant
    const Scalar kappa = ctx_.kappa_scalar();
    const long nn = static_cast<long>(ctx_.N);
    const Scalar den = Scalar(factorial(static_cast<unsigned long>(m - n))) *
                       Scalar(factorial(static_cast<unsigned long>(n))) *
                       pochhammer(kappa + Scalar(m - n + 1), static_cast<unsigned long>(n));
    if (den.is_zero())
        throw PoleError("omega_{" + std::to_string(m) + "," + std::to_string(n) +
                        "}(1^N) has a pole at kappa = " + ctx_.kappa->str());
    return pochhammer(kappa * Scalar(nn) + Scalar(1), static_cast<unsigned long>(m)) *
           pochhammer(kappa * Scalar(nn - 1) + Scalar(1), static_cast<unsigned long>(n)) / den;
}

Polynomial p_poly(int m, int n, const DunklContext& ctx) {
    JackBasis basis(ctx);
    return basis.p(m, n);
}

Polynomial omega(int m, int n, const DunklContext& ctx) {
    JackBasis basis(ctx);
    return basis.omega(m, n);
}

Scalar omega_at_ones(int m, int n, const DunklContext& ctx) {
    return JackBasis(ctx).omega_at_ones(m, n);
}

Polynomial f_poly(int m, int n, const std::optional<Rational>& kappa) {
    check_label(m, n);
    if (m < n) throw OrderError("f_{mn} needs m >= n");
    const Scalar k = kappa ? Scalar(*kappa) : Scalar::kappa();
    Polynomial f(2);
    for (int j = 0; j <= m - n; ++j) {
        const Scalar c =
            pochhammer(k + Scalar(1), static_cast<unsigned long>(m - n - j)) *
            pochhammer(k, static_cast<unsigned long>(j)) /
            Scalar(factorial(static_cast<unsigned long>(m - n - j)) *
                   factorial(static_cast<unsigned long>(j)));
        f.add_term(MultiIndex({m - j, n + j}), c);
    }
    return f;
}

Polynomial restrict_to_2(const Polynomial& f) {
    if (f.nvars() < 2) throw DimensionMismatch("restriction needs at least two variables");
    Polynomial r(2);
    for (const auto& [a, c] : f.terms()) {
        bool keep = true;
        for (int i = 2; i < f.nvars() && keep; ++i) keep = a[i] == 0;
        if (keep) r.add_term(MultiIndex({a[0], a[1]}), c);
    }
    return r;
}

}  // namespace dunkl
