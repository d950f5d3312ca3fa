#pragma once

#include <cstdint>
#include <string>

#include "grasslog/config_io.hpp"

namespace grasslog {

struct VerifyOptions {
    std::uint64_t seed = 42;
    long long budget_cp1 = 100000;
    long long budget_cp2 = 5000000;
    double tol_cp1 = 1e-6;
    int dilog_configs = 20;   // weight-2 coincidence sample count
    int trilog_configs = 2;   // CP^2 theorem sample count (acceptance uses 5)
    int functional_configs = 10;
};

/// Runs one verification suite ("exact", "forms", "functional", "quadrature"
/// or "all") and returns the machine-readable report; report["ok"] is the
/// pass/fail aggregate. Unknown suite names throw DomainError.
Json run_suite(const std::string& suite, const VerifyOptions& opts);

} // namespace grasslog
