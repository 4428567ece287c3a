// Times the unitarizable-module census sweep, serial against OpenMP-parallel,
// and cross-checks that both orderings produce identical rows.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "pbq/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double seconds(F&& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count();
}

bool same(const std::vector<pbq::AlgebraCensus>& a, const std::vector<pbq::AlgebraCensus>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].params.m != b[i].params.m || a[i].params.k != b[i].params.k) return false;
        if (a[i].rows != b[i].rows) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const long k_max = argc > 1 ? std::atol(argv[1]) : 48;

    std::vector<pbq::AlgebraCensus> serial, parallel;
    const double t_serial = seconds([&] { serial = pbq::census_sweep_serial(k_max); });
    const double t_parallel = seconds([&] { parallel = pbq::census_sweep_parallel(k_max); });

    std::size_t total_rows = 0;
    for (const pbq::AlgebraCensus& c : serial) total_rows += c.rows.size();

    std::cout << "census sweep up to k = " << k_max << ": " << serial.size() << " algebras, "
              << total_rows << " rows\n";
#ifdef _OPENMP
    std::cout << "threads:  " << omp_get_max_threads() << "\n";
#endif
    std::cout << "serial:   " << t_serial << " s\n";
    std::cout << "parallel: " << t_parallel << " s (speedup " << t_serial / t_parallel << "x)\n";

    if (!same(serial, parallel)) {
        std::cout << "MISMATCH: serial and parallel censuses differ\n";
        return 1;
    }
    std::cout << "serial and parallel censuses identical\n";
    return 0;
}
