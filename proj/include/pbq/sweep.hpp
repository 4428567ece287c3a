#pragma once

#include <string>
#include <vector>

#include "pbq/unitary.hpp"

namespace pbq {

struct AlgebraCensus {
    AlgebraParams params;
    std::vector<CensusRow> rows;
};

// Census of every admissible algebra with k <= k_max, ordered by (k, m).
// The two variants compute identical output; the parallel one distributes
// independent (m,k) jobs over OpenMP threads.
std::vector<AlgebraCensus> census_sweep_serial(long k_max);
std::vector<AlgebraCensus> census_sweep_parallel(long k_max);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifySummary {
    long m = 1;
    long k = 2;
    std::vector<CheckResult> checks;
    bool pass = true;

    void add(const std::string& name, bool ok, const std::string& detail = "");
};

// Full invariant suite for one algebra:
//   - closed-form top index == brute-force first-singular-vector scan, every
//     integer weight in the window;
//   - defining relations hold exactly on every classified module;
//   - ladder powers vanish and K^{2k} is scalar on every classified module;
//   - every strictly unitarizable census row yields orthonormal matrices
//     passing the conjugation contract;
//   - when fixtures_dir is nonempty, stored golden matrices for this algebra
//     are reproduced entrywise.
VerifySummary verify_algebra(long m, long k, const std::string& fixtures_dir = "");

// verify_algebra over all admissible (m,k), k <= k_max, in parallel;
// deterministic (k, m) order.
std::vector<VerifySummary> verify_sweep(long k_max, const std::string& fixtures_dir = "");

}  // namespace pbq
