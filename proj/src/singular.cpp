#include "dunkl/singular.hpp"

#include <numeric>

#include "dunkl/jack.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

Verdict is_singular(const Polynomial& f, const DunklContext& ctx) {
    if (ctx.is_generic())
        throw DomainError("is_singular needs a specialized kappa; a singular value is a number");
    if (f.nvars() != ctx.N) throw DimensionMismatch("polynomial nvars != context N");

    Verdict v;
    v.degree = f.total_degree();
    v.nonzero = !f.is_zero();
    v.degenerate_constant = v.nonzero && v.degree == 0;

    std::vector<Polynomial> images(static_cast<std::size_t>(ctx.N), Polynomial(ctx.N));
    parallel_for(static_cast<std::size_t>(ctx.N), 0, [&](std::size_t t) {
        images[t] = dunkl_apply(static_cast<int>(t) + 1, f, ctx);
    });
    for (int i = 1; i <= ctx.N; ++i) {
        Polynomial& r = images[static_cast<std::size_t>(i - 1)];
        if (!r.is_zero()) v.residuals.emplace(i, std::move(r));
    }
    v.singular = v.nonzero && v.residuals.empty();
    return v;
}

std::set<Rational> singular_values(int n_max, int j_max) {
    if (n_max < 2) throw RangeError("singular values need N >= 2");
    if (j_max < 1) throw RangeError("jmax must be positive");
    std::set<Rational> out;
    for (int n = 2; n <= n_max; ++n)
        for (int j = 1; j <= j_max; ++j)
            if (j % n != 0) out.insert(Rational(-j, n));
    return out;
}

namespace {

// Sparse row echelon basis over the coefficient field, keyed by pivot
// monomial.
class RowBasis {
  public:
    // Returns true when the row was independent and absorbed.
    bool insert(std::map<MultiIndex, Scalar> row) {
        for (auto& [pivot, basis_row] : rows_) {
            auto hit = row.find(pivot);
            if (hit == row.end()) continue;
            const Scalar factor = hit->second;  // basis rows are monic at the pivot
            for (const auto& [k, c] : basis_row) {
                auto it = row.find(k);
                if (it == row.end()) {
                    Scalar v = -(factor * c);
                    if (!v.is_zero()) row.emplace(k, std::move(v));
                } else {
                    it->second -= factor * c;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
        }
        if (row.empty()) return false;
        const MultiIndex pivot = row.begin()->first;
        const Scalar inv = row.begin()->second.inverse();
        for (auto& [k, c] : row) c *= inv;
        rows_.emplace(pivot, std::move(row));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

  private:
    std::map<MultiIndex, std::map<MultiIndex, Scalar>> rows_;
};

}  // namespace

ModuleRank module_rank(const Polynomial& f, const DunklContext& ctx, bool allow_large) {
    if (f.is_zero()) throw DomainError("module rank of the zero polynomial");
    if (f.nvars() != ctx.N) throw DimensionMismatch("polynomial nvars != context N");
    if (ctx.N > 5 && !allow_large)
        throw RangeError("module_rank enumerates N! permutations; N > 5 needs allow_large");

    ModuleRank out;
    RowBasis basis;
    for (const Permutation& w : Permutation::all(ctx.N)) {
        const Polynomial wf = permute(w, f);
        basis.insert(std::map<MultiIndex, Scalar>(wf.terms().begin(), wf.terms().end()));
    }
    out.rank = basis.rank();

    const Polynomial e = euler_dunkl(f, ctx);
    std::optional<Scalar> eigen;
    if (e.is_zero()) {
        eigen = Scalar(0);
    } else {
        const auto& lead = *f.terms().begin();
        const Scalar c = e.coeff(lead.first) / lead.second;
        Polynomial check = f;
        check *= c;
        if (check == e) eigen = c;
    }
    out.euler_eigen = eigen;
    if (eigen && f.is_homogeneous()) {
        const Scalar deg(static_cast<long>(f.total_degree()));
        const Scalar kappa = ctx.kappa_scalar();
        for (const Partition& tau : partitions_of(ctx.N))
            if (deg + kappa * Scalar(mu(tau)) == *eigen) out.isotype_candidates.push_back(tau);
    }
    return out;
}

namespace {

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    return h;
}

// Euler-Dunkl consistency: the operator annihilates f and the predicted
// eigenvalue deg + kappa mu(tau) is exactly zero for the family isotype.
bool euler_check(const Polynomial& f, const DunklContext& ctx, const Partition& tau) {
    if (!euler_dunkl(f, ctx).is_zero()) return false;
    const Rational predicted =
        Rational(f.total_degree()) + *ctx.kappa * Rational(mu(tau));
    return predicted.is_zero();
}

Certificate make_certificate(std::string family, std::vector<long> params, int n,
                             const Rational& kappa, long m_label, long n_label,
                             const Polynomial& poly, const DunklContext& ctx) {
    Certificate cert;
    cert.family = std::move(family);
    cert.params = std::move(params);
    cert.N = n;
    cert.kappa = kappa;
    cert.label = {m_label, n_label};
    cert.degree = poly.total_degree();
    cert.polynomial = poly;
    const Verdict v = is_singular(poly, ctx);
    cert.nonzero = v.nonzero;
    cert.dunkl_zero.assign(static_cast<std::size_t>(n), false);
    for (int i = 1; i <= n; ++i)
        cert.dunkl_zero[static_cast<std::size_t>(i - 1)] = !v.residuals.count(i);
    return cert;
}

}  // namespace

bool Certificate::ok() const {
    for (bool z : dunkl_zero)
        if (!z) return false;
    if (!nonzero || !euler_match) return false;
    if (antisymmetric_12 && !*antisymmetric_12) return false;
    if (rank && expected_rank && *rank != *expected_rank) return false;
    return true;
}

Json Certificate::to_json() const {
    Json j = Json::object();
    j["family"] = family;
    j["params"] = params;
    j["N"] = N;
    j["kappa"] = kappa.str();
    j["label"] = Json::array({label.first, label.second});
    j["degree"] = degree;
    Json checks = Json::object();
    checks["dunkl_zero"] = dunkl_zero;
    checks["nonzero"] = nonzero;
    checks["antisymmetric_12"] = antisymmetric_12 ? Json(*antisymmetric_12) : Json(nullptr);
    checks["euler_match"] = euler_match;
    checks["rank"] = rank ? Json(*rank) : Json(nullptr);
    j["checks"] = std::move(checks);
    const std::string poly_text = serialize(polynomial);
    j["content_hash"] = fnv1a(poly_text);
    j["polynomial"] = poly_to_json(polynomial);
    return j;
}

Certificate family_n0(long n, int N) {
    if (N < 2) throw RangeError("family omega_{n,0} needs N >= 2");
    if (n < 1) throw RangeError("family omega_{n,0} needs n >= 1");
    if (n % N == 0)
        throw DivisibilityError("omega_{n,0} is not singular when N divides n (N = " +
                                std::to_string(N) + ", n = " + std::to_string(n) + ")");
    const Rational kappa(-n, N);
    const DunklContext ctx = DunklContext::specialized(N, kappa);
    JackBasis basis(ctx);
    const Polynomial& w = basis.omega(static_cast<int>(n), 0);

    Certificate cert = make_certificate("n0", {n, static_cast<long>(N)}, N, kappa, n, 0, w, ctx);
    // Nonvanishing witness: p_{n,0}(1, 0, ..., 0) = (kappa+1)_n / n!.
    std::vector<Rational> point(static_cast<std::size_t>(N), Rational(0));
    point[0] = Rational(1);
    const Scalar at_point = w.evaluate(point);
    const Scalar expected = pochhammer(Scalar(kappa) + Scalar(1), static_cast<unsigned long>(n)) /
                            Scalar(factorial(static_cast<unsigned long>(n)));
    cert.nonzero = !at_point.is_zero() && at_point == expected;
    cert.euler_match = euler_check(w, ctx, Partition({N - 1, 1}));
    return cert;
}

Certificate family_nn(long n, int N) {
    if (N < 4) throw RangeError("family omega_{nn} needs N >= 4");
    if (n < 1) throw RangeError("family omega_{nn} needs n >= 1");
    const long g = std::gcd(n, static_cast<long>(N - 1));
    if (2 * g >= N - 1)
        throw GcdError("omega_{nn} needs gcd(N-1, n) < (N-1)/2 (N = " + std::to_string(N) +
                       ", n = " + std::to_string(n) + "); kappa would be -j or -j+1/2");
    const Rational kappa(-n, N - 1);
    const DunklContext ctx = DunklContext::specialized(N, kappa);
    JackBasis basis(ctx);
    const Polynomial& w = basis.omega(static_cast<int>(n), static_cast<int>(n));

    Certificate cert = make_certificate("nn", {n, static_cast<long>(N)}, N, kappa, n, n, w, ctx);
    cert.euler_match = euler_check(w, ctx, Partition({N - 2, 2}));
    return cert;
}

Certificate family_half(long l, long m) {
    if (l < 0) throw RangeError("family half needs l >= 0");
    if (m < 1) throw RangeError("family half needs m >= 1");
    const int N = static_cast<int>(2 * m + 1);
    const Rational kappa(-(2 * l + 1), 2);
    const long a = (2 * l + 1) * (m + 1);
    const long b = (2 * l + 1) * m;
    const DunklContext ctx = DunklContext::specialized(N, kappa);
    JackBasis basis(ctx);
    const Polynomial& w = basis.omega(static_cast<int>(a), static_cast<int>(b));

    Certificate cert = make_certificate("half", {l, m}, N, kappa, a, b, w, ctx);
    cert.antisymmetric_12 = transpose_vars(w, 1, 2) == -w;
    cert.euler_match = euler_check(w, ctx, Partition({N - 2, 1, 1}));
    if (N <= 5) {
        cert.rank = module_rank(w, ctx).rank;
        cert.expected_rank = static_cast<int>((N - 1) * (N - 2) / 2);
    }
    return cert;
}

}  // namespace dunkl
