#include "dunkl/verify.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include "dunkl/jack.hpp"
#include "dunkl/json_io.hpp"
#include "dunkl/krawtchouk.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/sampling.hpp"
#include "dunkl/singular.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

bool SuiteReport::all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

namespace {

// A check returns nullopt on pass or a short counterexample description.
using Check = std::function<std::optional<std::string>()>;

class Runner {
  public:
    void add(std::string key, Check check) {
        keys_.push_back(std::move(key));
        checks_.push_back(std::move(check));
    }

    SuiteReport run(std::string suite, int jobs) && {
        SuiteReport rep;
        rep.suite = std::move(suite);
        rep.cases.resize(keys_.size());
        parallel_for(keys_.size(), jobs, [&](std::size_t i) {
            CaseResult& r = rep.cases[i];
            r.key = keys_[i];
            try {
                auto fail = checks_[i]();
                r.pass = !fail.has_value();
                if (fail) r.detail = std::move(*fail);
            } catch (const std::exception& e) {
                r.pass = false;
                r.detail = std::string("exception: ") + e.what();
            }
        });
        std::sort(rep.cases.begin(), rep.cases.end(),
                  [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
        return rep;
    }

  private:
    std::vector<std::string> keys_;
    std::vector<Check> checks_;
};

std::string pad2(long v) {
    std::string s = std::to_string(v);
    return v >= 0 && v < 10 ? "0" + s : s;
}

std::string pad3(long v) {
    std::string s = std::to_string(v);
    while (v >= 0 && s.size() < 3) s.insert(s.begin(), '0');
    return s;
}

std::optional<std::string> expect_eq(const Polynomial& got, const Polynomial& want,
                                     const std::string& what) {
    if (got == want) return std::nullopt;
    std::ostringstream os;
    os << what << ": got " << serialize(got) << ", want " << serialize(want);
    return os.str();
}

std::optional<std::string> expect_zero(const Polynomial& got, const std::string& what) {
    if (got.is_zero()) return std::nullopt;
    return what + ": nonzero remainder " + serialize(got);
}

std::optional<std::string> expect_scalar_eq(const Scalar& got, const Scalar& want,
                                            const std::string& what) {
    if (got == want) return std::nullopt;
    return what + ": got " + got.str() + ", want " + want.str();
}

Polynomial omega_or_zero(JackBasis& basis, int m, int n) {
    if (m < 0 || n < 0) return Polynomial(basis.context().N);
    return basis.omega(m, n);
}

}  // namespace

SuiteReport verify_commute(const VerifyConfig& cfg) {
    const DunklContext ctx(cfg.N, cfg.kappa);
    PolySampler sampler(cfg.seed);
    std::vector<Polynomial> fs;
    fs.reserve(static_cast<std::size_t>(cfg.samples));
    for (int t = 0; t < cfg.samples; ++t)
        fs.push_back(sampler.random_poly(cfg.N, cfg.max_degree));

    Runner r;
    for (int t = 0; t < cfg.samples; ++t) {
        r.add("f=" + pad3(t), [t, &fs, ctx]() -> std::optional<std::string> {
            const Polynomial& f = fs[static_cast<std::size_t>(t)];
            for (int i = 1; i <= ctx.N; ++i)
                for (int j = i + 1; j <= ctx.N; ++j) {
                    const Polynomial lhs = dunkl_apply(i, dunkl_apply(j, f, ctx), ctx);
                    const Polynomial rhs = dunkl_apply(j, dunkl_apply(i, f, ctx), ctx);
                    if (!(lhs == rhs))
                        return "D_" + std::to_string(i) + " D_" + std::to_string(j) +
                               " disagreement on f = " + serialize(f);
                }
            return std::nullopt;
        });
    }
    return std::move(r).run("commute", cfg.jobs);
}

SuiteReport verify_recurrences(const VerifyConfig& cfg) {
    const DunklContext ctx(cfg.N, cfg.kappa);
    auto basis = std::make_shared<JackBasis>(ctx);
    const Scalar k = ctx.kappa_scalar();
    const int d = cfg.max_degree;
    Runner r;

    // Equation for m > n: D_1 p_{mn} = (N kappa + m) p_{m-1,n}
    //   + kappa sum_{i=0}^{n-1} (p_{m+n-1-i,i} - p_{i,m+n-1-i}).
    for (int m = 1; m <= d; ++m)
        for (int n = 0; n < m; ++n)
            r.add("eq2/m=" + pad2(m) + "/n=" + pad2(n),
                  [m, n, basis, k, ctx]() -> std::optional<std::string> {
                      Polynomial rhs(ctx.N);
                      rhs.add_scaled(basis->p(m - 1, n),
                                     k * Scalar(static_cast<long>(ctx.N)) + Scalar(m));
                      for (int i = 0; i < n; ++i) {
                          rhs.add_scaled(basis->p(m + n - 1 - i, i), k);
                          rhs.add_scaled(basis->p(i, m + n - 1 - i), -k);
                      }
                      return expect_eq(dunkl_apply(1, basis->p(m, n), ctx), rhs, "D_1 p recurrence");
                  });

    // Equation for n >= m >= 1: D_1 p_{mn} = ((N-1) kappa + m) p_{m-1,n}
    //   + kappa p_{n,m-1} + kappa sum_{i=0}^{m-2} (...); sum omitted at m=1.
    for (int n = 1; n <= d; ++n)
        for (int m = 1; m <= n; ++m)
            r.add("eq3/m=" + pad2(m) + "/n=" + pad2(n),
                  [m, n, basis, k, ctx]() -> std::optional<std::string> {
                      Polynomial rhs(ctx.N);
                      rhs.add_scaled(basis->p(m - 1, n),
                                     k * Scalar(static_cast<long>(ctx.N - 1)) + Scalar(m));
                      rhs.add_scaled(basis->p(n, m - 1), k);
                      for (int i = 0; i + 2 <= m; ++i) {
                          rhs.add_scaled(basis->p(m + n - 1 - i, i), k);
                          rhs.add_scaled(basis->p(i, m + n - 1 - i), -k);
                      }
                      return expect_eq(dunkl_apply(1, basis->p(m, n), ctx), rhs, "D_1 p recurrence");
                  });

    // Boundary annihilation: D_i p_{mn} = 0 for i > 2, D_2 p_{m0} = 0,
    // D_1 p_{0n} = 0.
    for (int m = 0; m <= d; ++m)
        for (int n = 0; n <= d; ++n)
            r.add("ann/m=" + pad2(m) + "/n=" + pad2(n),
                  [m, n, basis, ctx]() -> std::optional<std::string> {
                      for (int i = 3; i <= ctx.N; ++i)
                          if (auto bad = expect_zero(dunkl_apply(i, basis->p(m, n), ctx),
                                                     "D_" + std::to_string(i) + " p_{mn}"))
                              return bad;
                      return std::nullopt;
                  });
    for (int m = 0; m <= d; ++m)
        r.add("ann2/m=" + pad2(m), [m, basis, ctx]() {
            return expect_zero(dunkl_apply(2, basis->p(m, 0), ctx), "D_2 p_{m,0}");
        });
    for (int n = 0; n <= d; ++n)
        r.add("ann1/n=" + pad2(n), [n, basis, ctx]() {
            return expect_zero(dunkl_apply(1, basis->p(0, n), ctx), "D_1 p_{0,n}");
        });

    return std::move(r).run("recurrences", cfg.jobs);
}

SuiteReport verify_dwmn(const VerifyConfig& cfg) {
    const DunklContext ctx(cfg.N, cfg.kappa);
    auto basis = std::make_shared<JackBasis>(ctx);
    const Scalar k = ctx.kappa_scalar();
    const int d = cfg.max_degree;
    const long nn = ctx.N;
    Runner r;

    // Theorem part 1, m > n:
    // D_1 w_{mn} = (N k + m) w_{m-1,n}
    //   + ((N-1)k + n) k / (k + m - n) (w_{n-1,m} - k/(k+m-n+1) w_{m,n-1}).
    for (int m = 1; m <= d; ++m)
        for (int n = 0; n < m; ++n)
            r.add("thm3.1/m=" + pad2(m) + "/n=" + pad2(n),
                  [m, n, basis, k, ctx, nn]() -> std::optional<std::string> {
                      Polynomial rhs(ctx.N);
                      rhs.add_scaled(omega_or_zero(*basis, m - 1, n), k * Scalar(nn) + Scalar(m));
                      const Scalar outer =
                          (k * Scalar(nn - 1) + Scalar(n)) * k / (k + Scalar(m - n));
                      rhs.add_scaled(omega_or_zero(*basis, n - 1, m), outer);
                      rhs.add_scaled(omega_or_zero(*basis, m, n - 1),
                                     -outer * k / (k + Scalar(m - n + 1)));
                      return expect_eq(dunkl_apply(1, basis->omega(m, n), ctx), rhs, "Theorem part 1");
                  });

    // Theorem part 2, m >= n:
    // D_2 w_{mn} = ((N-1)k + n) (w_{m,n-1} - k/(k+m-n+1) w_{n-1,m}).
    for (int m = 0; m <= d; ++m)
        for (int n = 0; n <= m; ++n)
            r.add("thm3.2/m=" + pad2(m) + "/n=" + pad2(n),
                  [m, n, basis, k, ctx, nn]() -> std::optional<std::string> {
                      const Scalar outer = k * Scalar(nn - 1) + Scalar(n);
                      Polynomial rhs(ctx.N);
                      rhs.add_scaled(omega_or_zero(*basis, m, n - 1), outer);
                      rhs.add_scaled(omega_or_zero(*basis, n - 1, m),
                                     -outer * k / (k + Scalar(m - n + 1)));
                      return expect_eq(dunkl_apply(2, basis->omega(m, n), ctx), rhs, "Theorem part 2");
                  });

    // Theorem part 3, m = n:
    // D_1 w_{nn} = ((N-1)k + n) (w_{n-1,n} - k/(k+1) w_{n,n-1}).
    for (int n = 0; n <= d; ++n)
        r.add("thm3.3/n=" + pad2(n), [n, basis, k, ctx, nn]() -> std::optional<std::string> {
            const Scalar outer = k * Scalar(nn - 1) + Scalar(n);
            Polynomial rhs(ctx.N);
            rhs.add_scaled(omega_or_zero(*basis, n - 1, n), outer);
            rhs.add_scaled(omega_or_zero(*basis, n, n - 1), -outer * k / (k + Scalar(1)));
            return expect_eq(dunkl_apply(1, basis->omega(n, n), ctx), rhs, "Theorem part 3");
        });

    if (cfg.include_eigen) {
        for (int m = 0; m <= d; ++m)
            for (int n = 0; n <= m; ++n) {
                r.add("eigen1/m=" + pad2(m) + "/n=" + pad2(n),
                      [m, n, basis, k, ctx, nn]() -> std::optional<std::string> {
                          const Polynomial& w = basis->omega(m, n);
                          Polynomial want = w;
                          want *= k * Scalar(nn - 1) + Scalar(m + 1);
                          return expect_eq(dunkl_apply(1, w.times_variable(1), ctx), want,
                                           "D_1 x_1 eigenrelation");
                      });
                r.add("eigen2/m=" + pad2(m) + "/n=" + pad2(n),
                      [m, n, basis, k, ctx, nn]() -> std::optional<std::string> {
                          const Polynomial& w = basis->omega(m, n);
                          Polynomial lhs = dunkl_apply(2, w.times_variable(2), ctx);
                          lhs.add_scaled(transpose_vars(w, 1, 2), -k);
                          Polynomial want = w;
                          want *= k * Scalar(nn - 2) + Scalar(n + 1);
                          return expect_eq(lhs, want, "(D_2 x_2 - k (1,2)) eigenrelation");
                      });
                if (ctx.N > 2)
                    r.add("cher/m=" + pad2(m) + "/n=" + pad2(n),
                          [m, n, basis, k, ctx, nn]() -> std::optional<std::string> {
                              const Polynomial& w = basis->omega(m, n);
                              for (int i = 3; i <= ctx.N; ++i) {
                                  Polynomial want = w;
                                  want *= k * Scalar(nn - i) + Scalar(1);
                                  if (auto bad = expect_eq(cherednik(i, w, ctx), want,
                                                           "Cherednik eigenrelation i=" +
                                                               std::to_string(i)))
                                      return bad;
                                  // D_i x_i w = (1 + (N-3)k) w + k((1,i) + (2,i)) w
                                  Polynomial rhs = w;
                                  rhs *= Scalar(1) + k * Scalar(nn - 3);
                                  rhs.add_scaled(transpose_vars(w, 1, i), k);
                                  rhs.add_scaled(transpose_vars(w, 2, i), k);
                                  if (auto bad = expect_eq(dunkl_apply(i, w.times_variable(i), ctx),
                                                           rhs, "D_i x_i identity i=" +
                                                               std::to_string(i)))
                                      return bad;
                              }
                              return std::nullopt;
                          });
                if (ctx.N > 3)
                    r.add("sym/m=" + pad2(m) + "/n=" + pad2(n),
                          [m, n, basis, ctx]() -> std::optional<std::string> {
                              const Polynomial& w = basis->omega(m, n);
                              for (int i = 3; i <= ctx.N; ++i)
                                  for (int j = i + 1; j <= ctx.N; ++j)
                                      if (auto bad = expect_eq(transpose_vars(w, i, j), w,
                                                               "(i,j) symmetry"))
                                          return bad;
                              return std::nullopt;
                          });
            }
    }

    return std::move(r).run("dwmn", cfg.jobs);
}

SuiteReport verify_val1n(const VerifyConfig& cfg) {
    const DunklContext ctx(cfg.N, cfg.kappa);
    auto basis = std::make_shared<JackBasis>(ctx);
    const Scalar k = ctx.kappa_scalar();
    const int d = cfg.max_degree;
    const long nn = ctx.N;
    const std::vector<Rational> ones(static_cast<std::size_t>(ctx.N), Rational(1));
    Runner r;

    for (int m = 0; m <= d; ++m)
        for (int n = 0; n <= m; ++n)
            r.add("prop4/m=" + pad2(m) + "/n=" + pad2(n),
                  [m, n, basis, ones]() -> std::optional<std::string> {
                      return expect_scalar_eq(basis->omega(m, n).evaluate(ones),
                                              basis->omega_at_ones(m, n),
                                              "omega_{mn}(1^N) closed form");
                  });
    // Swapped labels evaluate through the (1,2) action.
    for (int n = 1; n <= std::min(d, 3); ++n)
        r.add("prop4swap/n=" + pad2(n), [n, basis, ones]() -> std::optional<std::string> {
            return expect_scalar_eq(basis->omega(n - 1, n).evaluate(ones),
                                    basis->omega_at_ones(n - 1, n),
                                    "omega_{mn}(1^N), m < n");
        });

    // p_{ij}(1^N) = (N kappa + 1)_i (N kappa + 1)_j / (i! j!).
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            r.add("pones/i=" + pad2(i) + "/j=" + pad2(j),
                  [i, j, basis, k, nn, ones]() -> std::optional<std::string> {
                      const Scalar want =
                          pochhammer(k * Scalar(nn) + Scalar(1), static_cast<unsigned long>(i)) *
                          pochhammer(k * Scalar(nn) + Scalar(1), static_cast<unsigned long>(j)) /
                          Scalar(factorial(static_cast<unsigned long>(i)) *
                                 factorial(static_cast<unsigned long>(j)));
                      return expect_scalar_eq(basis->p(i, j).evaluate(ones), want,
                                              "p_{ij}(1^N)");
                  });

    // p_{n,0}(1, 0, ..., 0) = (kappa + 1)_n / n!.
    for (int n = 0; n <= d; ++n)
        r.add("pe1/n=" + pad2(n), [n, basis, k, ctx]() -> std::optional<std::string> {
            std::vector<Rational> point(static_cast<std::size_t>(ctx.N), Rational(0));
            point[0] = Rational(1);
            const Scalar want = pochhammer(k + Scalar(1), static_cast<unsigned long>(n)) /
                                Scalar(factorial(static_cast<unsigned long>(n)));
            return expect_scalar_eq(basis->p(n, 0).evaluate(point), want, "p_{n,0}(1,0,...)");
        });

    if (cfg.include_dougall) {
        // The well-poised 5F4 behind the 1^N evaluation, vs Dougall's
        // closed form, for generic kappa.
        const std::vector<std::pair<int, int>> labels = {{2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 3}};
        for (int bigN = 2; bigN <= 5; ++bigN)
            for (const auto& [m, n] : labels)
                r.add("dougall/N=" + pad2(bigN) + "/m=" + pad2(m) + "/n=" + pad2(n),
                      [bigN, m = m, n = n]() -> std::optional<std::string> {
                          const Scalar kk = Scalar::kappa();
                          const Scalar a(static_cast<long>(m - n));
                          const Scalar half_a(Rational(m - n, 2));
                          const std::vector<Scalar> numer = {
                              a, half_a + Scalar(1), Scalar(-n), -kk,
                              kk * Scalar(bigN) + Scalar(m + 1)};
                          const std::vector<Scalar> denom = {
                              half_a, Scalar(m + 1), kk + Scalar(m - n + 1),
                              -kk * Scalar(bigN) - Scalar(n)};
                          const Scalar sum = hyp_terminating(numer, denom, Scalar(1),
                                                             static_cast<unsigned long>(n));
                          const Scalar want =
                              pochhammer(Scalar(m - n + 1), static_cast<unsigned long>(n)) *
                              pochhammer(kk * Scalar(1 - bigN) - Scalar(n),
                                         static_cast<unsigned long>(n)) /
                              (pochhammer(kk + Scalar(m - n + 1), static_cast<unsigned long>(n)) *
                               pochhammer(-kk * Scalar(bigN) - Scalar(n),
                                          static_cast<unsigned long>(n)));
                          return expect_scalar_eq(sum, want, "Dougall 5F4");
                      });
    }

    return std::move(r).run("val1n", cfg.jobs);
}

SuiteReport verify_n2(const VerifyConfig& cfg) {
    const DunklContext ctx(2, cfg.kappa);
    auto basis = std::make_shared<JackBasis>(ctx);
    const Scalar k = ctx.kappa_scalar();
    const int d = cfg.max_degree;
    Runner r;

    for (int m = 0; m <= d; ++m)
        for (int n = 0; n <= m; ++n) {
            r.add("eigenf/m=" + pad2(m) + "/n=" + pad2(n),
                  [m, n, k, ctx, &cfg]() -> std::optional<std::string> {
                      const Polynomial f = f_poly(m, n, cfg.kappa);
                      Polynomial want1 = f;
                      want1 *= k + Scalar(m + 1);
                      if (auto bad = expect_eq(dunkl_apply(1, f.times_variable(1), ctx), want1,
                                               "D_1 x_1 f_{mn}"))
                          return bad;
                      Polynomial lhs = dunkl_apply(2, f.times_variable(2), ctx);
                      lhs.add_scaled(transpose_vars(f, 1, 2), -k);
                      Polynomial want2 = f;
                      want2 *= Scalar(n + 1);
                      return expect_eq(lhs, want2, "(D_2 x_2 - k (1,2)) f_{mn}");
                  });
            r.add("prop/m=" + pad2(m) + "/n=" + pad2(n),
                  [m, n, basis, k, &cfg]() -> std::optional<std::string> {
                      // omega_{mn} = (2k+m-n+1)_n (k+1)_n / ((k+m-n+1)_n n!) f_{mn}
                      const Scalar c =
                          pochhammer(k * Scalar(2) + Scalar(m - n + 1),
                                     static_cast<unsigned long>(n)) *
                          pochhammer(k + Scalar(1), static_cast<unsigned long>(n)) /
                          (pochhammer(k + Scalar(m - n + 1), static_cast<unsigned long>(n)) *
                           Scalar(factorial(static_cast<unsigned long>(n))));
                      Polynomial want = f_poly(m, n, cfg.kappa);
                      want *= c;
                      return expect_eq(basis->omega(m, n), want, "omega = c f proportionality");
                  });
            r.add("fones/m=" + pad2(m) + "/n=" + pad2(n),
                  [m, n, k, &cfg]() -> std::optional<std::string> {
                      const std::vector<Rational> ones = {Rational(1), Rational(1)};
                      const Scalar want =
                          pochhammer(k * Scalar(2) + Scalar(1),
                                     static_cast<unsigned long>(m - n)) /
                          Scalar(factorial(static_cast<unsigned long>(m - n)));
                      return expect_scalar_eq(f_poly(m, n, cfg.kappa).evaluate(ones), want,
                                              "f_{mn}(1,1) Vandermonde value");
                  });
        }

    for (int m = 0; m <= d; ++m)
        r.add("fmm/m=" + pad2(m), [m, &cfg]() -> std::optional<std::string> {
            return expect_eq(f_poly(m, m, cfg.kappa),
                             Polynomial::monomial(MultiIndex({m, m}), Scalar(1)),
                             "f_{mm} = (x_1 x_2)^m");
        });

    // Restriction: omega coefficients are independent of N, so setting
    // x_i = 0 for i > 2 reproduces the N = 2 construction.
    {
        const int big = 4;
        const DunklContext bctx(big, cfg.kappa);
        auto bigbasis = std::make_shared<JackBasis>(bctx);
        for (int m = 0; m <= std::min(d, 4); ++m)
            for (int n = 0; n <= std::min(d, 4); ++n)
                r.add("restrict/m=" + pad2(m) + "/n=" + pad2(n),
                      [m, n, basis, bigbasis]() -> std::optional<std::string> {
                          return expect_eq(restrict_to_2(bigbasis->omega(m, n)),
                                           basis->omega(m, n), "restriction to N = 2");
                      });
    }

    // Nonvanishing (the 2 kappa excluded set): omega_{mn} != 0 at sampled
    // kappa with 2 kappa not in {-(m-n+1), ..., -m} and kappa not in -N.
    for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {4, 1}, {5, 5}}) {
        r.add("nonzero/m=" + pad2(m) + "/n=" + pad2(n),
              [m = m, n = n]() -> std::optional<std::string> {
                  const auto kappas = sample_kappas(5, [&](const Rational& kap) {
                      const Rational twice = kap * Rational(2);
                      if (twice.is_integer() && twice < Rational(0)) {
                          const Rational j = -twice;
                          if (j >= Rational(m - n + 1) && j <= Rational(m)) return false;
                      }
                      return !(kap.is_integer() && kap < Rational(0));
                  });
                  for (const Rational& kap : kappas) {
                      const DunklContext sctx = DunklContext::specialized(2, kap);
                      if (omega(m, n, sctx).is_zero())
                          return "omega vanished at kappa = " + kap.str();
                  }
                  return std::nullopt;
              });
    }

    return std::move(r).run("n2", cfg.jobs);
}

SuiteReport verify_krawtchouk(const VerifyConfig& cfg) {
    Runner r;
    const int nmax = 10;

    for (int n = 1; n <= nmax; ++n) {
        r.add("norm/n=" + pad2(n), [n]() -> std::optional<std::string> {
            for (int m = 0; m <= n; ++m)
                if (krawtchouk(m, Rational(0), n) != Rational(1))
                    return "K_" + std::to_string(m) + "(0; n) != 1";
            return std::nullopt;
        });
        r.add("genfun/n=" + pad2(n), [n]() -> std::optional<std::string> {
            for (int l = 0; l <= n; ++l) {
                // (1-s)^l (1+s)^{n-l} coefficient by coefficient.
                std::vector<Rational> lhs(static_cast<std::size_t>(n) + 1, Rational(0));
                for (int a = 0; a <= l; ++a)
                    for (int b = 0; b <= n - l; ++b) {
                        Rational term(binomial(static_cast<unsigned long>(l), a) *
                                      binomial(static_cast<unsigned long>(n - l), b));
                        if (a % 2 != 0) term = -term;
                        lhs[static_cast<std::size_t>(a + b)] += term;
                    }
                for (int m = 0; m <= n; ++m) {
                    const Rational want = Rational(binomial(static_cast<unsigned long>(n), m)) *
                                          krawtchouk(m, Rational(l), n);
                    if (lhs[static_cast<std::size_t>(m)] != want)
                        return "generating function fails at l=" + std::to_string(l) +
                               ", m=" + std::to_string(m);
                }
            }
            return std::nullopt;
        });
        r.add("orth/n=" + pad2(n), [n]() -> std::optional<std::string> {
            for (int m = 0; m <= n; ++m)
                for (int l = m; l <= n; ++l) {
                    Rational sum(0);
                    for (int t = 0; t <= n; ++t)
                        sum += Rational(binomial(static_cast<unsigned long>(n), t)) *
                               krawtchouk(m, Rational(t), n) * krawtchouk(l, Rational(t), n);
                    sum /= Rational(Integer(1) << n);
                    const Rational want =
                        m == l ? Rational(Integer(1), binomial(static_cast<unsigned long>(n), m))
                               : Rational(0);
                    if (sum != want)
                        return "orthogonality fails at m=" + std::to_string(m) +
                               ", l=" + std::to_string(l);
                }
            return std::nullopt;
        });
        r.add("hyp/n=" + pad2(n), [n]() -> std::optional<std::string> {
            for (int m = 0; m <= n; ++m)
                for (int l = 0; l <= n; ++l) {
                    const std::vector<Scalar> numer = {Scalar(-l), Scalar(-m)};
                    const std::vector<Scalar> denom = {Scalar(-n)};
                    const Scalar f21 = hyp_terminating(
                        numer, denom, Scalar(2), static_cast<unsigned long>(std::min(l, m)));
                    if (f21.to_rational() != krawtchouk(m, Rational(l), n))
                        return "2F1 form fails at m=" + std::to_string(m) +
                               ", l=" + std::to_string(l);
                }
            return std::nullopt;
        });
        r.add("sym/n=" + pad2(n), [n]() -> std::optional<std::string> {
            for (int m = 0; m <= n; ++m)
                for (int l = 0; l <= n; ++l)
                    if (krawtchouk(m, Rational(l), n) != krawtchouk(l, Rational(m), n))
                        return "symmetry fails at m=" + std::to_string(m) +
                               ", l=" + std::to_string(l);
            return std::nullopt;
        });
        r.add("parity/n=" + pad2(n), [n]() -> std::optional<std::string> {
            std::vector<Rational> ts;
            for (int t = 0; t <= n; ++t) ts.push_back(Rational(t));
            ts.push_back(Rational(1, 2));
            ts.push_back(Rational(-2, 3));
            for (int m = 0; m <= n; ++m)
                for (const Rational& t : ts) {
                    Rational want = krawtchouk(m, t, n);
                    if (m % 2 != 0) want = -want;
                    if (krawtchouk(m, Rational(n) - t, n) != want)
                        return "parity fails at m=" + std::to_string(m) + ", t=" + t.str();
                }
            return std::nullopt;
        });
    }

    return std::move(r).run("krawtchouk", cfg.jobs);
}

SuiteReport verify_qtransform(const VerifyConfig& cfg) {
    Runner r;

    // Degree-1 instances straight from the definition.
    r.add("basic", [&cfg]() -> std::optional<std::string> {
        const DunklContext ctx(cfg.N, cfg.kappa);
        JackBasis basis(ctx);
        if (auto bad = expect_eq(q_poly(0, 0, basis), Polynomial::constant(cfg.N, Scalar(1)),
                                 "q_{00}"))
            return bad;
        if (auto bad = expect_eq(q_poly(1, 0, basis), basis.p(1, 0) + basis.p(0, 1), "q_{10}"))
            return bad;
        return expect_eq(q_poly(0, 1, basis), basis.p(1, 0) - basis.p(0, 1), "q_{01}");
    });

    // Definition oracle: on the degree-d slice, sum_n q_{d-n,n} t^n must
    // match sum_{i+j=d} p_{ij} (1+t)^i (1-t)^j at d+1 distinct rationals.
    for (int d = 1; d <= std::min(cfg.max_degree, 4); ++d)
        r.add("defn/d=" + pad2(d), [d, &cfg]() -> std::optional<std::string> {
            const DunklContext ctx(cfg.N, cfg.kappa);
            JackBasis basis(ctx);
            for (int s = 0; s <= d; ++s) {
                const Rational t(2 * s - d, d + 1);  // d+1 distinct samples
                Polynomial lhs(cfg.N), rhs(cfg.N);
                Rational tpow(1);
                for (int n = 0; n <= d; ++n) {
                    lhs.add_scaled(q_poly(d - n, n, basis), Scalar(tpow));
                    tpow *= t;
                }
                for (int i = 0; i <= d; ++i) {
                    Rational c(1);
                    for (int u = 0; u < i; ++u) c *= Rational(1) + t;
                    for (int u = 0; u < d - i; ++u) c *= Rational(1) - t;
                    rhs.add_scaled(basis.p(i, d - i), Scalar(c));
                }
                if (auto bad = expect_eq(lhs, rhs, "definition slice at t = " + t.str()))
                    return bad;
            }
            return std::nullopt;
        });

    // p -> q inversion example: c = (1, 0) becomes d = (1/2, 1/2).
    r.add("inv1", []() -> std::optional<std::string> {
        const std::vector<Scalar> c = {Scalar(1), Scalar()};
        const std::vector<Scalar> got = p_to_q(c);
        const Rational half(1, 2);
        if (got.size() != 2 || !(got[0] == Scalar(half)) || !(got[1] == Scalar(half)))
            return "p_to_q((1,0)) != (1/2, 1/2)";
        return std::nullopt;
    });

    // Round trip: expand random p-combinations through p_to_q and q_poly.
    {
        PolySampler sampler(cfg.seed);
        const auto kappas = sample_kappas(3, [](const Rational& kap) {
            return !(kap.is_integer() && kap < Rational(0));
        });
        const int combos = 50;
        std::vector<std::vector<Scalar>> cs;
        std::vector<int> degs;
        for (int t = 0; t < combos; ++t) {
            const int deg = 1 + static_cast<int>(sampler.raw() % static_cast<std::uint64_t>(
                                                     std::max(1, cfg.max_degree)));
            std::vector<Scalar> c(static_cast<std::size_t>(deg) + 1);
            bool nonzero = false;
            for (auto& x : c) {
                const long v = static_cast<long>(sampler.raw() % 7) - 3;
                x = Scalar(v);
                nonzero = nonzero || v != 0;
            }
            if (!nonzero) c[0] = Scalar(1);
            cs.push_back(std::move(c));
            degs.push_back(deg);
        }
        for (int t = 0; t < combos; ++t)
            r.add("roundtrip/c=" + pad3(t),
                  [t, cs, degs, kappas]() -> std::optional<std::string> {
                const int deg = degs[static_cast<std::size_t>(t)];
                const auto& c = cs[static_cast<std::size_t>(t)];
                const std::vector<Scalar> dvec = p_to_q(c);
                for (const Rational& kap : kappas) {
                    const DunklContext ctx = DunklContext::specialized(3, kap);
                    JackBasis basis(ctx);
                    Polynomial f(3), g(3);
                    for (int i = 0; i <= deg; ++i) {
                        f.add_scaled(basis.p(deg - i, i), c[static_cast<std::size_t>(i)]);
                        g.add_scaled(q_poly(deg - i, i, basis), dvec[static_cast<std::size_t>(i)]);
                    }
                    if (auto bad =
                            expect_eq(g, f, "p/q round trip at kappa = " + kap.str()))
                        return bad;
                }
                return std::nullopt;
            });
    }

    return std::move(r).run("qtransform", cfg.jobs);
}

SuiteReport verify_props1011(const VerifyConfig& cfg) {
    Runner r;

    // Vanishing pattern for omega_{n-i,i} at kappa = -(n-2i+1)/2, n even:
    // q-coefficients d_l = 0 for l > n-2i, every d_l rational.
    for (int n = 2; n <= 10; n += 2)
        for (int i = 1; 2 * i <= n; ++i)
            r.add("prop10/n=" + pad2(n) + "/i=" + pad2(i),
                  [n, i, &cfg]() -> std::optional<std::string> {
                      const Rational kap(-(n - 2 * i + 1), 2);
                      const DunklContext ctx = DunklContext::specialized(std::max(2, cfg.N), kap);
                      const JackBasis basis(ctx);
                      const std::vector<Scalar> c = basis.omega_p_coeffs(n - i, i);
                      const std::vector<Scalar> d = p_to_q(c);
                      for (int l = 0; l <= n; ++l) {
                          if (!d[static_cast<std::size_t>(l)].is_constant())
                              return "coefficient " + std::to_string(l) + " is not rational";
                          if (l > n - 2 * i && !d[static_cast<std::size_t>(l)].is_zero())
                              return "q-coefficient " + std::to_string(l) +
                                     " = " + d[static_cast<std::size_t>(l)].str() +
                                     " should vanish";
                      }
                      return std::nullopt;
                  });

    // omega_{n-i,i} + omega_{i,n-i} at kappa = -(n-2i)/2, n odd: d_l = 0
    // for l > n-2i-1 and for every odd l.
    for (int n = 1; n <= 11; n += 2)
        for (int i = 0; 2 * i < n; ++i)
            r.add("prop11/n=" + pad2(n) + "/i=" + pad2(i),
                  [n, i, &cfg]() -> std::optional<std::string> {
                      const Rational kap(-(n - 2 * i), 2);
                      const DunklContext ctx = DunklContext::specialized(std::max(2, cfg.N), kap);
                      const JackBasis basis(ctx);
                      const std::vector<Scalar> c = basis.omega_p_coeffs(n - i, i);
                      std::vector<Scalar> sum(c.size());
                      for (int j = 0; j <= n; ++j)
                          sum[static_cast<std::size_t>(j)] =
                              c[static_cast<std::size_t>(j)] +
                              c[static_cast<std::size_t>(n - j)];
                      const std::vector<Scalar> d = p_to_q(sum);
                      for (int l = 0; l <= n; ++l) {
                          const bool must_vanish = l > n - 2 * i - 1 || l % 2 != 0;
                          if (must_vanish && !d[static_cast<std::size_t>(l)].is_zero())
                              return "q-coefficient " + std::to_string(l) +
                                     " = " + d[static_cast<std::size_t>(l)].str() +
                                     " should vanish";
                      }
                      return std::nullopt;
                  });

    return std::move(r).run("props1011", cfg.jobs);
}

SuiteReport verify_ablemma(const VerifyConfig& cfg) {
    Runner r;
    for (int l = 0; l <= 3; ++l)
        for (int n = 0; n <= 2 * l; ++n)
            for (const ABKind kind : {ABKind::A, ABKind::B})
                r.add(std::string("ab/") + (kind == ABKind::A ? "A" : "B") + "/l=" + pad2(l) +
                          "/n=" + pad2(n),
                      [kind, l, n]() -> std::optional<std::string> {
                          const Rational kap(-(2 * l + 1), 2);
                          const DunklContext ctx = DunklContext::specialized(2, kap);
                          const UnivariateSeries closed = ab_closed(kind, n, l);
                          // Expand a little past the closed form's degree:
                          // coefficients beyond it must vanish.
                          const UnivariateSeries series =
                              ab_series(kind, n, ctx, closed.truncation + 2);
                          if (!(series == closed)) {
                              return std::string("expansion disagrees with closed form");
                          }
                          if (kind == ABKind::A && n % 2 != 0 && closed.degree() != -1)
                              return std::string("A_n should vanish for odd n");
                          return std::nullopt;
                      });
    return std::move(r).run("ablemma", cfg.jobs);
}

SuiteReport verify_q2z_at(const std::vector<std::pair<int, int>>& nl_pairs, int jobs) {
    Runner r;
    for (const auto& [bigN, l] : nl_pairs) {
        const int top = bigN * (2 * l + 1);
        for (int n = 0; n <= 2 * l; ++n)
            for (int total = top - 1; total <= top; ++total) {
                const int m = total - n;
                if (m < 0) continue;
                r.add("N=" + pad2(bigN) + "/l=" + pad2(l) + "/m=" + pad2(m) + "/n=" + pad2(n),
                      [bigN = bigN, l = l, m, n]() -> std::optional<std::string> {
                          const Rational kap(-(2 * l + 1), 2);
                          const DunklContext ctx = DunklContext::specialized(bigN, kap);
                          return expect_zero(q_poly(m, n, ctx),
                                             "q_{mn} at kappa = " + kap.str());
                      });
            }
    }
    return std::move(r).run("q2z", jobs);
}

SuiteReport verify_q2z(const VerifyConfig& cfg) {
    std::vector<std::pair<int, int>> pairs = {{cfg.N, 0}};
    if (cfg.N == 3) pairs.push_back({3, 1});
    return verify_q2z_at(pairs, cfg.jobs);
}

SuiteReport verify_families_half(const VerifyConfig& cfg) {
    Runner r;

    for (const auto& [l, m] : std::vector<std::pair<long, long>>{{0, 1}, {1, 1}, {0, 2}})
        r.add("half/l=" + pad2(l) + "/m=" + pad2(m), [l = l, m = m]() -> std::optional<std::string> {
            const Certificate cert = family_half(l, m);
            if (!cert.ok()) return "certificate checks failed: " + cert.to_json().dump();
            return std::nullopt;
        });

    // For N = 3 the isotype (1,1,1) is one-dimensional, so the l = 0
    // member must be a multiple of the alternating polynomial.
    r.add("half/alt-multiple", []() -> std::optional<std::string> {
        const Certificate cert = family_half(0, 1);
        const Polynomial a3 = alternating(3, 1);
        const Polynomial& w = cert.polynomial;
        if (w.is_zero()) return "omega_{2,1} vanished";
        const auto& lead = *w.terms().begin();
        const Scalar ratio = lead.second / a3.coeff(lead.first);
        Polynomial scaled = a3;
        scaled *= ratio;
        if (!(scaled == w)) return "omega_{2,1} is not proportional to a_3";
        return std::nullopt;
    });

    // The engine route of the theorem: omega_{a-1,b} vanishes identically
    // at the family's kappa.
    for (const auto& [l, m] : std::vector<std::pair<long, long>>{{0, 1}, {1, 1}, {0, 2}})
        r.add("half/core-vanish/l=" + pad2(l) + "/m=" + pad2(m),
              [l = l, m = m]() -> std::optional<std::string> {
                  const int bigN = static_cast<int>(2 * m + 1);
                  const Rational kap(-(2 * l + 1), 2);
                  const DunklContext ctx = DunklContext::specialized(bigN, kap);
                  const long a = (2 * l + 1) * (m + 1), b = (2 * l + 1) * m;
                  return expect_zero(omega(static_cast<int>(a - 1), static_cast<int>(b), ctx),
                                     "omega_{a-1,b}");
              });

    // module_rank pins the isotype dimension binom(N-1, 2).
    r.add("half/rank02", []() -> std::optional<std::string> {
        const Certificate cert = family_half(0, 2);
        if (!cert.rank || *cert.rank != 6)
            return "rank of the N=5 module should be binom(4,2) = 6";
        return std::nullopt;
    });

    // Any nonzero element of the module is singular: check 10 permuted
    // copies.
    r.add("half/invariance", [&cfg]() -> std::optional<std::string> {
        const Certificate cert = family_half(0, 1);
        const DunklContext ctx = DunklContext::specialized(3, cert.kappa);
        PolySampler sampler(cfg.seed);
        const auto all = Permutation::all(3);
        for (int t = 0; t < 10; ++t) {
            const Permutation& w = all[sampler.raw() % all.size()];
            if (!is_singular(permute(w, cert.polynomial), ctx).singular)
                return "permuted copy is not singular";
        }
        return std::nullopt;
    });

    // Isotype exclusion by the Euler-Dunkl eigenvalue.
    for (const auto& [l, m] : std::vector<std::pair<long, long>>{{0, 1}, {0, 2}})
        r.add("half/isotype/l=" + pad2(l) + "/m=" + pad2(m),
              [l = l, m = m]() -> std::optional<std::string> {
                  const Certificate cert = family_half(l, m);
                  const int bigN = cert.N;
                  const Rational deg(static_cast<long>(cert.degree));
                  std::vector<Partition> excluded = {Partition({bigN - 1, 1}),
                                                     Partition({bigN})};
                  if (bigN >= 4) excluded.push_back(Partition({bigN - 2, 2}));
                  for (const Partition& tau : excluded)
                      if ((deg + cert.kappa * Rational(mu(tau))).is_zero())
                          return "eigenvalue fails to exclude isotype " + tau.str();
                  const Rational keep =
                      deg + cert.kappa * Rational(mu(Partition({bigN - 2, 1, 1})));
                  if (!keep.is_zero()) return std::string("eigenvalue should vanish on (N-2,1,1)");
                  return std::nullopt;
              });

    return std::move(r).run("families_half", cfg.jobs);
}

SuiteReport verify_families_classic(const VerifyConfig& cfg) {
    Runner r;

    for (const auto& [n, bigN] :
         std::vector<std::pair<long, int>>{{1, 2}, {2, 3}, {1, 3}, {3, 4}})
        r.add("n0/n=" + pad2(n) + "/N=" + pad2(bigN),
              [n = n, bigN = bigN]() -> std::optional<std::string> {
                  const Certificate cert = family_n0(n, bigN);
                  if (!cert.ok()) return "certificate checks failed: " + cert.to_json().dump();
                  return std::nullopt;
              });

    r.add("n0/smallest", []() -> std::optional<std::string> {
        // omega_{1,0} at N = 2, kappa = -1/2 is (x_1 - x_2)/2.
        const Certificate cert = family_n0(1, 2);
        Polynomial want = Polynomial::variable(2, 1) - Polynomial::variable(2, 2);
        want *= Scalar(Rational(1, 2));
        return expect_eq(cert.polynomial, want, "omega_{1,0} at kappa = -1/2");
    });

    r.add("n0/reject-divisible", []() -> std::optional<std::string> {
        try {
            family_n0(3, 3);
        } catch (const DivisibilityError&) {
            return std::nullopt;
        }
        return std::string("family_n0(3, 3) should raise DivisibilityError");
    });

    for (const auto& [n, bigN] : std::vector<std::pair<long, int>>{{1, 4}, {1, 5}, {3, 5}})
        r.add("nn/n=" + pad2(n) + "/N=" + pad2(bigN),
              [n = n, bigN = bigN]() -> std::optional<std::string> {
                  const Certificate cert = family_nn(n, bigN);
                  if (!cert.ok()) return "certificate checks failed: " + cert.to_json().dump();
                  return std::nullopt;
              });

    r.add("nn/reject-gcd", []() -> std::optional<std::string> {
        try {
            family_nn(2, 5);
        } catch (const GcdError&) {
            return std::nullopt;
        }
        return std::string("family_nn(2, 5) should raise GcdError");
    });

    return std::move(r).run("families_classic", cfg.jobs);
}

SuiteReport verify_alternating(const VerifyConfig& cfg) {
    Runner r;

    for (const auto& [bigN, l] : std::vector<std::pair<int, int>>{{3, 0}, {3, 1}, {4, 0}})
        r.add("alt/N=" + pad2(bigN) + "/l=" + pad2(l),
              [bigN = bigN, l = l]() -> std::optional<std::string> {
                  const Polynomial a = alternating(bigN, 2 * l + 1);
                  const Rational kap(-(2 * l + 1), 2);
                  const Verdict good = is_singular(a, DunklContext::specialized(bigN, kap));
                  if (!good.singular) return std::string("a_N^{2l+1} should be singular");
                  const Verdict bad = is_singular(a, DunklContext::specialized(bigN, Rational(1)));
                  if (bad.singular) return std::string("a_N^{2l+1} is not singular at kappa = 1");
                  for (int i = 1; i <= bigN; ++i)
                      if (!bad.residuals.count(i))
                          return "residual D_" + std::to_string(i) + " unexpectedly zero";
                  return std::nullopt;
              });

    // Transposition antisymmetry of a_N.
    r.add("alt/sign", []() -> std::optional<std::string> {
        for (int bigN : {2, 3, 4}) {
            const Polynomial a = alternating(bigN, 1);
            for (int i = 1; i <= bigN; ++i)
                for (int j = i + 1; j <= bigN; ++j)
                    if (!(transpose_vars(a, i, j) == -a))
                        return "transposition does not negate a_N";
        }
        return std::nullopt;
    });

    // D_i(a_N^{2l+1}) (2l+1) = (2l+1+2 kappa) d/dx_i (a_N^{2l+1}), the
    // polynomial form of the singularity computation, generic kappa.
    for (const auto& [bigN, l] : std::vector<std::pair<int, int>>{{3, 0}, {3, 1}, {2, 1}})
        r.add("alt/identity/N=" + pad2(bigN) + "/l=" + pad2(l),
              [bigN = bigN, l = l]() -> std::optional<std::string> {
                  const DunklContext ctx = DunklContext::generic(bigN);
                  const Scalar k = Scalar::kappa();
                  const Polynomial a = alternating(bigN, 2 * l + 1);
                  for (int i = 1; i <= bigN; ++i) {
                      Polynomial lhs = dunkl_apply(i, a, ctx);
                      lhs *= Scalar(2 * l + 1);
                      Polynomial rhs = partial(a, i);
                      rhs *= Scalar(2 * l + 1) + k * Scalar(2);
                      if (auto bad = expect_eq(lhs, rhs, "alternating identity i=" +
                                                             std::to_string(i)))
                          return bad;
                  }
                  return std::nullopt;
              });

    return std::move(r).run("alternating", cfg.jobs);
}

SuiteReport verify_consistency(const VerifyConfig& cfg) {
    Runner r;

    r.add("sv/examples", []() -> std::optional<std::string> {
        const std::set<Rational> a = singular_values(2, 3);
        if (a != std::set<Rational>{Rational(-1, 2), Rational(-3, 2)})
            return std::string("singular_values(2, 3) mismatch");
        const std::set<Rational> b = singular_values(3, 2);
        if (b != std::set<Rational>{Rational(-1, 2), Rational(-1, 3), Rational(-2, 3)})
            return std::string("singular_values(3, 2) mismatch");
        for (const Rational& v : singular_values(5, 20))
            if (v.is_integer()) return std::string("integer leaked into singular values");
        return std::nullopt;
    });

    // Every certified kappa must appear among the candidate values.
    r.add("sv/families", []() -> std::optional<std::string> {
        const std::vector<Certificate> certs = {family_n0(1, 2), family_n0(2, 3),
                                                family_nn(1, 4), family_half(0, 1),
                                                family_half(1, 1)};
        for (const Certificate& cert : certs) {
            const std::set<Rational> sv = singular_values(cert.N, 24);
            if (!sv.count(cert.kappa))
                return "kappa = " + cert.kappa.str() + " missing from singular_values";
        }
        return std::nullopt;
    });

    r.add("mu/values", []() -> std::optional<std::string> {
        for (int bigN = 3; bigN <= 7; ++bigN) {
            if (mu(Partition({bigN - 1, 1})) != bigN) return std::string("mu((N-1,1)) != N");
            if (mu(Partition({bigN})) != 0) return std::string("mu((N)) != 0");
            if (mu(Partition(std::vector<int>(static_cast<std::size_t>(bigN), 1))) !=
                static_cast<long>(bigN) * (bigN - 1))
                return std::string("mu((1^N)) != N(N-1)");
            if (bigN >= 4 && mu(Partition({bigN - 2, 2})) != 2 * bigN - 2)
                return std::string("mu((N-2,2)) != 2N-2");
            if (mu(Partition({bigN - 2, 1, 1})) != 2 * bigN)
                return std::string("mu((N-2,1,1)) != 2N");
        }
        return std::nullopt;
    });

    // Necessity: for every certified singular polynomial, deg + kappa *
    // mu(tau) = 0 for its isotype as identified by the module rank.
    r.add("necessity", []() -> std::optional<std::string> {
        const std::vector<Certificate> certs = {family_n0(1, 3), family_nn(1, 4),
                                                family_half(0, 1)};
        for (const Certificate& cert : certs) {
            const DunklContext ctx = DunklContext::specialized(cert.N, cert.kappa);
            const ModuleRank mr = module_rank(cert.polynomial, ctx);
            if (!mr.euler_eigen || !(*mr.euler_eigen == Scalar(0)))
                return std::string("certified polynomial is not an Euler-Dunkl null vector");
            bool matched = false;
            for (const Partition& tau : mr.isotype_candidates)
                matched = matched ||
                          (Rational(cert.degree) + cert.kappa * Rational(mu(tau))).is_zero();
            if (!matched) return std::string("no isotype candidate satisfies the kappa formula");
        }
        return std::nullopt;
    });

    r.add("rank/basics", [&cfg]() -> std::optional<std::string> {
        const DunklContext ctx = DunklContext::specialized(3, Rational(-1, 2));
        const Polynomial a3 = alternating(3, 1);
        if (module_rank(a3, ctx).rank != 1) return std::string("rank of a_3 span should be 1");
        Polynomial sym(3);
        for (int i = 1; i <= 3; ++i) sym += Polynomial::variable(3, i);
        if (module_rank(sym, ctx).rank != 1)
            return std::string("rank of symmetric polynomial span should be 1");
        const DunklContext g = DunklContext::generic(cfg.N);
        Polynomial s2(cfg.N);
        for (int i = 1; i <= cfg.N; ++i) s2 += Polynomial::variable(cfg.N, i);
        if (!(euler_dunkl(s2, g) == s2))
            return std::string("Euler-Dunkl eigenvalue of x_1+...+x_N should be 1");
        return std::nullopt;
    });

    // Euler-Dunkl on a_N at generic kappa: eigenvalue deg + kappa N(N-1).
    r.add("euler/alternating", []() -> std::optional<std::string> {
        for (int bigN : {2, 3, 4}) {
            const DunklContext ctx = DunklContext::generic(bigN);
            const Polynomial a = alternating(bigN, 1);
            Polynomial want = a;
            want *= Scalar(static_cast<long>(bigN) * (bigN - 1) / 2) +
                    Scalar::kappa() * Scalar(static_cast<long>(bigN) * (bigN - 1));
            if (!(euler_dunkl(a, ctx) == want))
                return std::string("Euler-Dunkl eigenvalue of a_N mismatch");
        }
        return std::nullopt;
    });

    // Euler decomposition: sum x_i D_i = sum x_i d/dx_i + kappa
    // sum_{i<j} (1 - (i,j)) on random polynomials.
    r.add("euler/decomposition", [&cfg]() -> std::optional<std::string> {
        PolySampler sampler(cfg.seed);
        const DunklContext ctx(cfg.N, cfg.kappa);
        const Scalar k = ctx.kappa_scalar();
        for (int t = 0; t < 20; ++t) {
            const Polynomial f = sampler.random_poly(cfg.N, cfg.max_degree);
            Polynomial rhs(cfg.N);
            for (int i = 1; i <= cfg.N; ++i) rhs += partial(f, i).times_variable(i);
            for (int i = 1; i <= cfg.N; ++i)
                for (int j = i + 1; j <= cfg.N; ++j) {
                    rhs.add_scaled(f, k);
                    rhs.add_scaled(transpose_vars(f, i, j), -k);
                }
            if (auto bad = expect_eq(euler_dunkl(f, ctx), rhs,
                                     "Euler decomposition on f = " + serialize(f)))
                return bad;
        }
        return std::nullopt;
    });

    // Product rule: D_i(fg) = f D_i g + (df/dx_i) g
    //   + kappa sum_j [(f - (i,j)f)/(x_i-x_j)] (i,j)g.
    r.add("product-rule", [&cfg]() -> std::optional<std::string> {
        PolySampler sampler(cfg.seed + 1);
        const DunklContext ctx(cfg.N, cfg.kappa);
        const Scalar k = ctx.kappa_scalar();
        for (int t = 0; t < 10; ++t) {
            const Polynomial f = sampler.random_poly(cfg.N, 3);
            const Polynomial g = sampler.random_poly(cfg.N, 3);
            for (int i = 1; i <= cfg.N; ++i) {
                Polynomial rhs = Polynomial::mul(f, dunkl_apply(i, g, ctx));
                rhs += Polynomial::mul(partial(f, i), g);
                for (int j = 1; j <= cfg.N; ++j) {
                    if (j == i) continue;
                    rhs.add_scaled(
                        Polynomial::mul(divided_difference(f, i, j), transpose_vars(g, i, j)),
                        k);
                }
                if (auto bad = expect_eq(dunkl_apply(i, Polynomial::mul(f, g), ctx), rhs,
                                         "product rule i=" + std::to_string(i)))
                    return bad;
            }
        }
        return std::nullopt;
    });

    return std::move(r).run("consistency", cfg.jobs);
}

std::vector<std::string> suite_names() {
    return {"commute", "recurrences", "dwmn",    "val1n",    "n2",
            "krawtchouk", "qexpand",  "q2z",     "families", "all"};
}

std::vector<SuiteReport> run_suites(const std::string& name, const VerifyConfig& cfg) {
    std::vector<SuiteReport> out;
    auto want = [&](const char* s) { return name == s || name == "all"; };
    if (want("commute")) out.push_back(verify_commute(cfg));
    if (want("recurrences")) out.push_back(verify_recurrences(cfg));
    if (want("dwmn")) out.push_back(verify_dwmn(cfg));
    if (want("val1n")) out.push_back(verify_val1n(cfg));
    if (want("n2")) out.push_back(verify_n2(cfg));
    if (want("krawtchouk")) out.push_back(verify_krawtchouk(cfg));
    if (want("qexpand")) {
        out.push_back(verify_qtransform(cfg));
        out.push_back(verify_props1011(cfg));
        out.push_back(verify_ablemma(cfg));
    }
    if (want("q2z")) out.push_back(verify_q2z(cfg));
    if (want("families")) {
        out.push_back(verify_families_half(cfg));
        out.push_back(verify_families_classic(cfg));
        out.push_back(verify_alternating(cfg));
        out.push_back(verify_consistency(cfg));
    }
    if (out.empty()) throw RangeError("unknown suite '" + name + "'");
    return out;
}

void print_report(std::ostream& os, const SuiteReport& report) {
    std::size_t passed = 0;
    for (const CaseResult& c : report.cases) {
        if (c.pass) {
            ++passed;
            os << "PASS " << report.suite << "/" << c.key << "\n";
        } else {
            os << "FAIL " << report.suite << "/" << c.key << ": " << c.detail << "\n";
        }
    }
    os << "suite " << report.suite << ": " << passed << "/" << report.cases.size()
       << " cases passed\n";
}

}  // namespace dunkl
