#ifndef DUNKL_VERIFY_HPP
#define DUNKL_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

/// Knobs shared by the verification suites.  A fixed config (seed
/// included) makes a suite's report byte-reproducible.
struct VerifyConfig {
    int N = 3;
    std::optional<Rational> kappa;  // nullopt = generic mode
    int max_degree = 6;
    std::uint64_t seed = 7;
    int samples = 100;
    int jobs = 0;
    bool include_eigen = true;    // dwmn: also run the eigen/symmetry cases
    bool include_dougall = true;  // val1n: also run the 5F4 identity cases
};

struct CaseResult {
    std::string key;
    bool pass = false;
    std::string detail;  // empty on pass; counterexample data on failure
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;  // sorted by key
    bool all_pass() const;
};

// One suite per block of spec'd identities.  Cases run independently (in
// parallel up to cfg.jobs) and are reported in canonical key order.
SuiteReport verify_commute(const VerifyConfig& cfg);      // D_i D_j = D_j D_i
SuiteReport verify_recurrences(const VerifyConfig& cfg);  // D_1 p_{mn} recurrences
SuiteReport verify_dwmn(const VerifyConfig& cfg);         // D omega theorem + eigenrelations
SuiteReport verify_val1n(const VerifyConfig& cfg);        // 1^N evaluations, Dougall 5F4
SuiteReport verify_n2(const VerifyConfig& cfg);           // N = 2: f_{mn} suite
SuiteReport verify_krawtchouk(const VerifyConfig& cfg);   // Krawtchouk properties 1..6
SuiteReport verify_qtransform(const VerifyConfig& cfg);   // q_{mn} + basis change round trip
SuiteReport verify_props1011(const VerifyConfig& cfg);    // q-coefficient vanishing patterns
SuiteReport verify_ablemma(const VerifyConfig& cfg);      // A_n/B_n closed forms vs expansion
SuiteReport verify_q2z(const VerifyConfig& cfg);          // q_{mn} = 0 region
SuiteReport verify_q2z_at(const std::vector<std::pair<int, int>>& nl_pairs, int jobs);
SuiteReport verify_families_half(const VerifyConfig& cfg);     // the (N-2,1,1) family
SuiteReport verify_families_classic(const VerifyConfig& cfg);  // omega_{n,0}, omega_{nn}
SuiteReport verify_alternating(const VerifyConfig& cfg);       // a_N^{2l+1} family
SuiteReport verify_consistency(const VerifyConfig& cfg);  // singular values, mu, ranks

/// Suites the CLI exposes; "all" expands to every entry.
std::vector<std::string> suite_names();
/// Runs one named CLI suite (or "all"); throws RangeError for an unknown
/// name.
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyConfig& cfg);

/// Canonical "PASS suite/key" / "FAIL suite/key: detail" lines.
void print_report(std::ostream& os, const SuiteReport& report);
/// The same content as a deterministic JSON document.
std::string reports_to_json(const std::vector<SuiteReport>& reports);

}  // namespace dunkl

#endif
