#pragma once

#include <string>
#include <vector>

namespace jackd {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Verification batteries. Each runs exactly and reports the first failure in
// the detail string. The max_n arguments cap the largest object size; passing
// a smaller bound shrinks the battery, never loosens a tolerance.
CheckResult check_paper_value_regression();
CheckResult check_oracle_agreement(int max_n = 6);
CheckResult check_character_oracle(int max_n = 8, const std::string& cache_dir = "");
CheckResult check_graph_spectra(int max_n = 5);
CheckResult check_hook_identities(int max_first_row = 6, int max_size = 12);
CheckResult check_sign_pattern(int max_n = 9);
CheckResult check_kuwales(int max_n = 9);
CheckResult check_extrema(int max_n = 9);
CheckResult check_alpha2_structure(int max_n = 8);
CheckResult check_immanants();

/// Suites exposed by the command line: all, main, signs, kuwales, extrema,
/// graphs, identities, alpha2. max_n <= 0 keeps each battery's default cap.
std::vector<CheckResult> run_suite(const std::string& suite, int max_n = 0,
                                   const std::string& cache_dir = "");

}  // namespace jackd
