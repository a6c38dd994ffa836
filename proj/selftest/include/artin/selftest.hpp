#pragma once

#include <string>
#include <vector>

namespace artin {

struct CriterionResult {
    int id = 0;
    std::string suite;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;
};

struct SelftestOptions {
    // Runs criteria whose suite or name contains this text; empty runs all.
    std::string filter;
    // Replaces the cached Witt polynomials for p = 2, n = 4 by wrong ones
    // before running, as a negative control.
    bool corrupt_witt_cache = false;
    // Directory of *.spec files with their committed JSON outputs.
    std::string golden_dir;
};

std::vector<CriterionResult> run_selftest(const SelftestOptions& options);

// "PASS [3] perfection: ... (0.12 s / limit 10 s)".
std::string format_result(const CriterionResult& r);

// Output of the conductor and ram commands for a spec file, without the
// trailing newline.
std::string conductor_output(const std::string& spec_path);
std::string ram_output(const std::string& spec_path);

}  // namespace artin
