// Oracle and invariant checks behind `qwb selftest` and the acceptance
// binary. Each check is numbered and runs under a wall-clock budget that
// counts toward its verdict.

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace qwb::cli {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool report_only = false;  // outcome is reported, never a failure
    double seconds = 0.0;
    double limit_seconds = 0.0;
    std::string detail;
};

struct SelftestOptions {
    int threads = 1;
    // Scratch directory for the determinism check; empty picks one under the
    // system temporary directory.
    std::filesystem::path work_dir;
    // When set, the determinism check also runs this executable twice per
    // command and compares its files.
    std::string cli_path;
};

CheckResult check_unitarity_sweep(const SelftestOptions& options);
CheckResult check_evolution(const SelftestOptions& options);
CheckResult check_permutation_spectra(const SelftestOptions& options);
CheckResult check_bloch_table(const SelftestOptions& options);
CheckResult check_curved_reduction(const SelftestOptions& options);
CheckResult check_tensor_oracle(const SelftestOptions& options);
CheckResult check_statistics_pipeline(const SelftestOptions& options);
CheckResult check_gap_exclusion(const SelftestOptions& options);
CheckResult check_electric_report(const SelftestOptions& options);
CheckResult check_determinism(const SelftestOptions& options);

// All checks in order 1..10.
std::vector<CheckResult> run_selftest(const SelftestOptions& options);

// `PASS  3 permutation spectra  (0.01 s, limit 1 s)  detail`
std::string format_check(const CheckResult& result);

// True unless some check that is not report-only failed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qwb::cli
