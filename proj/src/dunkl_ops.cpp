#include "dunkl/dunkl_ops.hpp"

#include <numeric>
#include <sstream>

#include "dunkl/parallel.hpp"

namespace dunkl {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw InvalidPartition("empty partition");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw InvalidPartition("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw InvalidPartition("partition parts must be weakly decreasing");
    }
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {

void check_operator_args(int i, const Polynomial& f, const DunklContext& ctx) {
    if (f.nvars() != ctx.N) throw DimensionMismatch("polynomial nvars != context N");
    if (i < 1 || i > ctx.N) throw IndexError("operator index out of range");
}

}  // namespace

Polynomial dunkl_apply_serial(int i, const Polynomial& f, const DunklContext& ctx) {
    check_operator_args(i, f, ctx);
    Polynomial diff_sum(ctx.N);
    for (int j = 1; j <= ctx.N; ++j) {
        if (j == i) continue;
        diff_sum += divided_difference(f, i, j);
    }
    Polynomial r = partial(f, i);
    r.add_scaled(diff_sum, ctx.kappa_scalar());
    return r;
}

Polynomial dunkl_apply(int i, const Polynomial& f, const DunklContext& ctx) {
    check_operator_args(i, f, ctx);
    if (max_threads() <= 1 || f.term_count() < 512) return dunkl_apply_serial(i, f, ctx);
    std::vector<int> js;
    for (int j = 1; j <= ctx.N; ++j)
        if (j != i) js.push_back(j);
    std::vector<Polynomial> parts(js.size(), Polynomial(ctx.N));
    parallel_for(js.size(), 0, [&](std::size_t t) {
        parts[t] = divided_difference(f, i, js[t]);
    });
    Polynomial diff_sum(ctx.N);
    for (const auto& p : parts) diff_sum += p;
    Polynomial r = partial(f, i);
    r.add_scaled(diff_sum, ctx.kappa_scalar());
    return r;
}

Polynomial euler_dunkl(const Polynomial& f, const DunklContext& ctx) {
    if (f.nvars() != ctx.N) throw DimensionMismatch("polynomial nvars != context N");
    Polynomial r(ctx.N);
    for (int i = 1; i <= ctx.N; ++i) r += dunkl_apply(i, f, ctx).times_variable(i);
    return r;
}

long mu(const Partition& tau) {
    const long n = tau.n();
    long s = 0;
    for (std::size_t j = 0; j < tau.parts.size(); ++j) {
        const long t = tau.parts[j];
        s += t * (t + 1 - 2 * static_cast<long>(j + 1));
    }
    return n * (n - 1) / 2 - s / 2;
}

Polynomial cherednik(int i, const Polynomial& f, const DunklContext& ctx) {
    check_operator_args(i, f, ctx);
    Polynomial r = dunkl_apply(i, f.times_variable(i), ctx);
    const Scalar kappa = ctx.kappa_scalar();
    for (int j = 1; j < i; ++j) r.add_scaled(transpose_vars(f, i, j), -kappa);
    return r;
}

Polynomial alternating(int n, int power) {
    if (n < 2) throw RangeError("alternating polynomial needs N >= 2");
    if (power < 1 || power % 2 == 0)
        throw EvenPowerError("only odd powers of the alternating polynomial are singular");
    Polynomial a = Polynomial::constant(n, Scalar(1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            a = a * (Polynomial::variable(n, i) - Polynomial::variable(n, j));
    Polynomial r = a;
    for (int k = 1; k < power; ++k) r = r * a;
    return r;
}

}  // namespace dunkl
