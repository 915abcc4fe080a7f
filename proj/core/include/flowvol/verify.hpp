#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flowvol {

struct VerifyOptions {
    std::string corpus = "random";  // "random" or "builtin"
    std::uint64_t seed = 1;
    int trials = 200;    // random corpus size
    int max_n = 4;       // vertices 1..n+1
    int max_m = 8;       // total edges
    long long max_a = 3; // netflow entries drawn from 0..max_a
};

struct CheckResult {
    std::string name;
    bool passed = true;
    long long cases = 0;     // individual equalities exercised
    std::string detail;      // first failing instance, empty when passed
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed = true;
    long long total_cases = 0;
};

// Runs every cross-method identity over the corpus: volume formulas against
// the Ehrhart oracle, both lattice point formulas against direct counts,
// reversal and indegree routes, the flow/tree correspondence, reduction tree
// leaf censuses and additivity, cell count and cell type determinants,
// Pitman-Stanley closed forms, and Ehrhart positivity.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace flowvol
