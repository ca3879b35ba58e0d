// Command-line surface: construct polynomials, run the verification
// suites, emit singularity certificates, print evaluation tables.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 domain/pole error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dunkl/dunkl_ops.hpp"
#include "dunkl/jack.hpp"
#include "dunkl/json_io.hpp"
#include "dunkl/krawtchouk.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/singular.hpp"
#include "dunkl/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct CommonOpts {
    int N = 3;
    std::string kappa = "generic";
    int max_degree = 6;
    unsigned long long seed = 7;
    std::string out = "text";
    int jobs = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--N", opts.N, "number of variables")->check(CLI::Range(2, 16));
    cmd->add_option("--kappa", opts.kappa, "'generic' or an exact rational p/q");
    cmd->add_option("--max-degree", opts.max_degree, "label/degree bound for sweeps")
        ->check(CLI::Range(0, 16));
    cmd->add_option("--seed", opts.seed, "seed for the randomized suites");
    cmd->add_option("--out", opts.out, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--jobs", opts.jobs, "max worker threads (0 = hardware)");
}

std::optional<dunkl::Rational> parse_kappa(const std::string& text) {
    if (text == "generic") return std::nullopt;
    return dunkl::Rational::parse(text);
}

void emit_poly(const dunkl::Polynomial& f, const CommonOpts& opts) {
    if (opts.out == "json")
        std::cout << dunkl::serialize(f) << "\n";
    else
        std::cout << f.str() << "\n";
}

int run_poly(const std::string& kind, int m, int n, const CommonOpts& opts) {
    const auto kappa = parse_kappa(opts.kappa);
    const dunkl::DunklContext ctx(opts.N, kappa);
    if (kind == "p") {
        emit_poly(dunkl::p_poly(m, n, ctx), opts);
    } else if (kind == "omega") {
        emit_poly(dunkl::omega(m, n, ctx), opts);
    } else if (kind == "q") {
        emit_poly(dunkl::q_poly(m, n, ctx), opts);
    } else if (kind == "f2") {
        emit_poly(dunkl::f_poly(m, n, kappa), opts);
    } else if (kind == "alt") {
        emit_poly(dunkl::alternating(opts.N, m), opts);
    } else {
        std::cerr << "unknown polynomial kind '" << kind << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_verify(const std::string& suite, const CommonOpts& opts) {
    dunkl::VerifyConfig cfg;
    cfg.N = opts.N;
    cfg.kappa = parse_kappa(opts.kappa);
    cfg.max_degree = opts.max_degree;
    cfg.seed = opts.seed;
    cfg.jobs = opts.jobs;
    const auto reports = dunkl::run_suites(suite, cfg);
    bool ok = true;
    for (const auto& rep : reports) {
        dunkl::print_report(std::cout, rep);
        ok = ok && rep.all_pass();
    }
    return ok ? kExitOk : kExitVerifyFail;
}

int run_family(const std::string& family, long p1, long p2, const CommonOpts& opts) {
    dunkl::Certificate cert;
    if (family == "n0") {
        cert = dunkl::family_n0(p1, static_cast<int>(p2));
    } else if (family == "nn") {
        cert = dunkl::family_nn(p1, static_cast<int>(p2));
    } else if (family == "half") {
        cert = dunkl::family_half(p1, p2);
    } else {
        std::cerr << "unknown family '" << family << "'\n";
        return kExitUsage;
    }
    std::cout << cert.to_json().dump(2) << "\n";
    return cert.ok() ? kExitOk : kExitVerifyFail;
}

int run_table(const std::string& kind, int m_max, int n_max, const CommonOpts& opts) {
    if (kind != "val1n") {
        std::cerr << "unknown table kind '" << kind << "'\n";
        return kExitUsage;
    }
    if (m_max < n_max) {
        std::cerr << "--m-max must be at least --n-max\n";
        return kExitUsage;
    }
    const dunkl::DunklContext ctx(opts.N, parse_kappa(opts.kappa));
    dunkl::JackBasis basis(ctx);
    const std::vector<dunkl::Rational> ones(static_cast<std::size_t>(opts.N),
                                            dunkl::Rational(1));
    bool ok = true;
    for (int m = 0; m <= m_max; ++m) {
        for (int n = 0; n <= std::min(m, n_max); ++n) {
            const dunkl::Scalar closed = basis.omega_at_ones(m, n);
            const dunkl::Scalar direct = basis.omega(m, n).evaluate(ones);
            const bool match = closed == direct;
            ok = ok && match;
            std::cout << "omega(" << m << "," << n << ")(1^N): closed = " << closed.str()
                      << ", direct = " << direct.str() << (match ? "" : "  MISMATCH") << "\n";
        }
    }
    return ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Dunkl operators, Jack-type polynomials, and singular-polynomial "
                 "certificates for the symmetric group"};
    app.require_subcommand(1);

    CommonOpts opts;

    std::string poly_kind;
    int poly_m = 0, poly_n = 0;
    CLI::App* poly = app.add_subcommand("poly", "construct one polynomial and print it");
    poly->add_option("kind", poly_kind, "p | omega | q | f2 | alt")
        ->required()
        ->check(CLI::IsMember({"p", "omega", "q", "f2", "alt"}));
    poly->add_option("m", poly_m, "first label (power for 'alt')")->required();
    poly->add_option("n", poly_n, "second label (unused for 'alt')");
    add_common(poly, opts);

    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "commute | recurrences | dwmn | val1n | n2 | "
                                       "krawtchouk | qexpand | q2z | families | all")
        ->required()
        ->check(CLI::IsMember(dunkl::suite_names()));
    add_common(verify, opts);

    std::string family;
    long fam_p1 = 0, fam_p2 = 0;
    CLI::App* fam = app.add_subcommand("family", "emit a singularity certificate");
    fam->add_option("family", family, "n0 | nn | half")
        ->required()
        ->check(CLI::IsMember({"n0", "nn", "half"}));
    fam->add_option("p1", fam_p1, "n (families n0/nn) or l (family half)")->required();
    fam->add_option("p2", fam_p2, "N (families n0/nn) or m (family half)")->required();
    add_common(fam, opts);

    std::string table_kind;
    int m_max = 4, n_max = 4;
    CLI::App* table = app.add_subcommand("table", "closed form vs direct evaluation tables");
    table->add_option("kind", table_kind, "val1n")->required();
    table->add_option("--m-max", m_max, "largest m");
    table->add_option("--n-max", n_max, "largest n");
    add_common(table, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        dunkl::set_max_threads(opts.jobs);
        if (poly->parsed()) return run_poly(poly_kind, poly_m, poly_n, opts);
        if (verify->parsed()) return run_verify(suite, opts);
        if (fam->parsed()) return run_family(family, fam_p1, fam_p2, opts);
        if (table->parsed()) return run_table(table_kind, m_max, n_max, opts);
    } catch (const dunkl::Error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
