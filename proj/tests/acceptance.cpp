// Acceptance suite: one line per criterion, exit status 1 if any fails.

#include "qwb/cli/config.hpp"
#include "qwb/cli/selftest.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>

using namespace qwb::cli;

int main() {
    SelftestOptions options;
    options.threads = resolve_threads(0);
    options.cli_path = QWB_CLI_PATH;
    options.work_dir = std::filesystem::temp_directory_path() / ("qwb_acceptance_" + std::to_string(std::random_device{}()));

    const std::vector<CheckResult> results = run_selftest(options);
    for (const auto& r : results) {
        const char* verdict = r.passed ? (r.report_only ? "PASS (report-only)" : "PASS") : "FAIL";
        std::printf("criterion %2d %-18s %s: %s (%.2f s of %g s)\n", r.id, verdict, r.name.c_str(), r.detail.c_str(),
                    r.seconds, r.limit_seconds);
    }
    const bool ok = all_passed(results);
    std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: at least one criterion failed");
    return ok ? 0 : 1;
}
