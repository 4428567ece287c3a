#include "pbq/sweep.hpp"

#include <filesystem>

#include "pbq/io.hpp"

namespace pbq {

namespace {

std::vector<AlgebraParams> admissible_list(long k_max) {
    std::vector<AlgebraParams> out;
    for (long k = 2; k <= k_max; ++k)
        for (long m = 1; m < k; ++m)
            if (is_admissible(m, k)) out.push_back(algebra_params(m, k));
    return out;
}

AlgebraCensus census_job(const AlgebraParams& params) {
    return AlgebraCensus{params, classify_unitarizable(params)};
}

}  // namespace

std::vector<AlgebraCensus> census_sweep_serial(long k_max) {
    const std::vector<AlgebraParams> jobs = admissible_list(k_max);
    std::vector<AlgebraCensus> out(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = census_job(jobs[i]);
    return out;
}

std::vector<AlgebraCensus> census_sweep_parallel(long k_max) {
    const std::vector<AlgebraParams> jobs = admissible_list(k_max);
    std::vector<AlgebraCensus> out(jobs.size());
    const auto count = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = census_job(jobs[static_cast<std::size_t>(i)]);
    return out;
}

void VerifySummary::add(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back(CheckResult{name, ok, detail});
    pass = pass && ok;
}

VerifySummary verify_algebra(long m, long k, const std::string& fixtures_dir) {
    VerifySummary summary;
    summary.m = m;
    summary.k = k;

    const AlgebraParams params = algebra_params(m, k);
    const long W = integer_window_max(params);

    // Closed-form top index against a brute-force singular-vector scan.
    {
        bool ok = true;
        std::string detail;
        for (long p = 1; p <= W; ++p) {
            const long expected = closed_form_L(params, p);
            SingularVectorReport scan =
                singular_vectors(m, k, Weight::from_rational(Rational(p)), 4 * k + 1);
            long first_interior = -1;
            for (const SingularVectorEntry& entry : scan.singular)
                if (entry.n >= 1) {
                    first_interior = entry.n;
                    break;
                }
            if (first_interior - 1 != expected) {
                ok = false;
                detail = "p=" + std::to_string(p) + ": table gives L=" + std::to_string(expected) +
                         ", scan gives " + std::to_string(first_interior - 1);
                break;
            }
        }
        summary.add("top index table == singular-vector scan", ok, detail);
    }

    const std::vector<IrrepDescriptor> irreps = vacuum_irreps(params);

    // Defining relations, exactly, on every classified module.
    {
        bool ok = true;
        std::string detail;
        for (const IrrepDescriptor& desc : irreps) {
            RepMatrices rep = module_matrices(ModuleSpec{m, k, desc.p, 0, desc.L});
            RelationReport report = verify_relations(rep);
            if (!report.pass || !report.exact_mode) {
                ok = false;
                detail = "p=" + desc.p.to_string() + ", L=" + std::to_string(desc.L);
                break;
            }
        }
        summary.add("defining relations exact on all modules", ok, detail);
    }

    // Vanishing ladder powers and scalar K^{2k}.
    {
        bool ok = true;
        std::string detail;
        for (const IrrepDescriptor& desc : irreps) {
            if (!central_checks(desc).pass()) {
                ok = false;
                detail = "p=" + desc.p.to_string() + ", L=" + std::to_string(desc.L);
                break;
            }
        }
        summary.add("central powers vanish / K^{2k} scalar", ok, detail);
    }

    // Unitarity contract on every strictly unitarizable census row; boundary
    // rows must be refused by the orthonormal construction.
    const std::vector<CensusRow> census = classify_unitarizable(params);
    {
        bool ok = true;
        std::string detail;
        for (const CensusRow& row : census) {
            const Weight p = Weight::from_rational(row.p);
            if (row.status == UnitaryStatus::unitarizable) {
                RepMatrices rep = orthonormal_matrices(params, p, row.L);
                if (!verify_unitarity(rep).pass) {
                    ok = false;
                    detail = "p=" + to_string(row.p) + ", L=" + std::to_string(row.L);
                    break;
                }
            } else {
                try {
                    orthonormal_matrices(params, p, row.L);
                    ok = false;
                    detail = "boundary row p=" + to_string(row.p) + ", L=" +
                             std::to_string(row.L) + " was not refused";
                    break;
                } catch (const NotUnitarizableError&) {
                }
            }
        }
        summary.add("orthonormal contract on census rows", ok, detail);
    }

    // Golden matrices, when stored for this algebra.
    if (!fixtures_dir.empty()) {
        bool ok = true;
        long compared = 0;
        std::string detail;
        const Real bound = pow(real_from_long(10, kDefaultDigits), -40);
        for (const CensusRow& row : census) {
            if (row.status != UnitaryStatus::unitarizable) continue;
            const std::filesystem::path path =
                std::filesystem::path(fixtures_dir) / fixture_filename(m, k, row.L);
            if (!std::filesystem::exists(path)) continue;
            RepMatrices stored = rep_from_json_string(read_text_file(path.string()));
            if (!(stored.spec.p == Weight::from_rational(row.p))) continue;
            RepMatrices live = orthonormal_matrices(params, Weight::from_rational(row.p), row.L);
            Real deviation = rep_max_deviation(live, stored);
            if (!(deviation < bound)) {
                ok = false;
                detail = path.filename().string() + " deviates by " +
                         decimal_string(deviation, 8);
                break;
            }
            ++compared;
        }
        if (ok) detail = std::to_string(compared) + " file(s) compared";
        summary.add("stored golden matrices reproduced", ok, detail);
    }

    return summary;
}

std::vector<VerifySummary> verify_sweep(long k_max, const std::string& fixtures_dir) {
    const std::vector<AlgebraParams> jobs = admissible_list(k_max);
    std::vector<VerifySummary> out(jobs.size());
    const auto count = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const AlgebraParams& job = jobs[static_cast<std::size_t>(i)];
        VerifySummary& slot = out[static_cast<std::size_t>(i)];
        try {
            slot = verify_algebra(job.m, job.k, fixtures_dir);
        } catch (const std::exception& ex) {
            slot.m = job.m;
            slot.k = job.k;
            slot.add("exception", false, ex.what());
        }
    }
    return out;
}

}  // namespace pbq
