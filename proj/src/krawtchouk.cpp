#include "dunkl/krawtchouk.hpp"

#include "dunkl/special.hpp"

namespace dunkl {

Rational krawtchouk(int m, const Rational& t, int n) {
    if (n < 1 || m < 0 || m > n) throw RangeError("krawtchouk needs 0 <= m <= n");
    Rational sum(0);
    for (int j = 0; j <= m; ++j) {
        Rational term = pochhammer(t - Rational(n), static_cast<unsigned long>(m - j)) *
                        pochhammer(-t, static_cast<unsigned long>(j));
        term /= Rational(factorial(static_cast<unsigned long>(m - j)) *
                         factorial(static_cast<unsigned long>(j)));
        if ((m - j) % 2 != 0) term = -term;
        sum += term;
    }
    return sum / Rational(binomial(static_cast<unsigned long>(n), m));
}

namespace {

// Coefficient of u^m v^n in (u+v)^i (u-v)^j, for i + j = m + n.
Integer uv_coefficient(int i, int j, int m) {
    Integer c(0);
    for (int r = 0; r <= j; ++r) {  // r = u-power taken from (u-v)^j
        const int a = m - r;        // u-power taken from (u+v)^i
        if (a < 0 || a > i) continue;
        Integer term = binomial(static_cast<unsigned long>(i), a) *
                       binomial(static_cast<unsigned long>(j), r);
        if ((j - r) % 2 != 0) term = -term;
        c += term;
    }
    return c;
}

}  // namespace

Polynomial q_poly(int m, int n, JackBasis& basis) {
    if (m < 0 || n < 0) throw RangeError("polynomial labels must be nonnegative");
    const int d = m + n;
    Polynomial q(basis.context().N);
    for (int i = 0; i <= d; ++i) {
        const Integer c = uv_coefficient(i, d - i, m);
        if (c == 0) continue;
        q.add_scaled(basis.p(i, d - i), Scalar(c));
    }
    return q;
}

Polynomial q_poly(int m, int n, const DunklContext& ctx) {
    JackBasis basis(ctx);
    return q_poly(m, n, basis);
}

std::vector<Scalar> p_to_q(std::span<const Scalar> c) {
    if (c.empty()) return {};
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<Scalar> d(c.size());
    const Scalar scale = Scalar(Rational(Integer(1), Integer(1) << n));
    for (int i = 0; i <= n; ++i) {
        Scalar acc;
        for (int j = 0; j <= n; ++j) {
            if (c[static_cast<std::size_t>(j)].is_zero()) continue;
            const Rational w = Rational(binomial(static_cast<unsigned long>(n), j)) *
                               krawtchouk(i, Rational(j), n);
            acc += c[static_cast<std::size_t>(j)] * Scalar(w);
        }
        d[static_cast<std::size_t>(i)] = acc * scale;
    }
    return d;
}

const Scalar& UnivariateSeries::coeff(int k) const {
    static const Scalar zero;
    if (k < 0 || static_cast<std::size_t>(k) >= coef.size()) return zero;
    return coef[static_cast<std::size_t>(k)];
}

int UnivariateSeries::degree() const {
    for (int k = static_cast<int>(coef.size()) - 1; k >= 0; --k)
        if (!coef[static_cast<std::size_t>(k)].is_zero()) return k;
    return -1;
}

bool operator==(const UnivariateSeries& a, const UnivariateSeries& b) {
    const int top = std::max(static_cast<int>(a.coef.size()), static_cast<int>(b.coef.size()));
    for (int k = 0; k < top; ++k)
        if (!(a.coeff(k) == b.coeff(k))) return false;
    return true;
}

UnivariateSeries ab_series(ABKind kind, int n, const DunklContext& ctx, int truncation) {
    if (n < 0 || truncation < 0) throw RangeError("series indices must be nonnegative");
    const Scalar kappa = ctx.kappa_scalar();
    const Scalar e1 = kind == ABKind::A ? kappa : kappa + Scalar(1);

    // (1 - w)^{-e} = sum_k (e)_k / k! w^k; substitute w = u + v resp. u - v
    // and read off u^a v^b.
    auto coeff_uv = [](const Scalar& e, int a, int b, bool minus_v) {
        Scalar c = pochhammer(e, static_cast<unsigned long>(a + b)) /
                   Scalar(factorial(static_cast<unsigned long>(a + b))) *
                   Scalar(binomial(static_cast<unsigned long>(a + b), a));
        if (minus_v && b % 2 != 0) c = -c;
        return c;
    };

    UnivariateSeries s;
    s.truncation = truncation;
    s.coef.assign(static_cast<std::size_t>(truncation) + 1, Scalar());
    for (int a = 0; a <= truncation; ++a) {
        Scalar acc;
        for (int a1 = 0; a1 <= a; ++a1)
            for (int b1 = 0; b1 <= n; ++b1)
                acc += coeff_uv(e1, a1, b1, false) * coeff_uv(kappa, a - a1, n - b1, true);
        s.coef[static_cast<std::size_t>(a)] = acc;
    }
    return s;
}

UnivariateSeries ab_closed(ABKind kind, int n, int l) {
    if (n < 0 || l < 0) throw RangeError("series indices must be nonnegative");
    if (n > 2 * l) throw RangeError("closed form asserted only for n <= 2l");
    const Rational half(1, 2);

    UnivariateSeries s;
    if (kind == ABKind::A) {
        const int deg = 2 * l + 1 - n;
        s.truncation = deg;
        s.coef.assign(static_cast<std::size_t>(deg) + 1, Scalar());
        if (n % 2 != 0) return s;  // A_n = 0 for odd n
        const int j = n / 2;
        const Rational lead = pochhammer(-Rational(l) - half, static_cast<unsigned long>(j)) /
                              Rational(factorial(static_cast<unsigned long>(j)));
        for (int i = 0; i <= deg; ++i) {
            Rational c = lead * Rational(binomial(static_cast<unsigned long>(deg), i));
            if (i % 2 != 0) c = -c;
            s.coef[static_cast<std::size_t>(i)] = Scalar(c);
        }
        return s;
    }
    const int deg = 2 * l - n;
    const int j = n / 2;
    s.truncation = deg;
    s.coef.assign(static_cast<std::size_t>(deg) + 1, Scalar());
    const Rational lead = pochhammer(-Rational(l) + half, static_cast<unsigned long>(j)) /
                          Rational(factorial(static_cast<unsigned long>(j)));
    for (int i = 0; i <= deg; ++i) {
        Rational c = lead * Rational(binomial(static_cast<unsigned long>(deg), i));
        if (i % 2 != 0) c = -c;
        s.coef[static_cast<std::size_t>(i)] = Scalar(c);
    }
    return s;
}

}  // namespace dunkl
