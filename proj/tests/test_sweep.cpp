#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pbq/io.hpp"
#include "pbq/sweep.hpp"

using namespace pbq;

namespace {

bool same_census(const AlgebraCensus& a, const AlgebraCensus& b) {
    if (a.params.m != b.params.m || a.params.k != b.params.k) return false;
    if (a.rows.size() != b.rows.size()) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (!(a.rows[i] == b.rows[i])) return false;
    }
    return true;
}

const CheckResult* find_check(const VerifySummary& summary, const std::string& name) {
    for (const CheckResult& c : summary.checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("serial and parallel censuses are identical") {
    for (long k_max : {4L, 9L}) {
        CAPTURE(k_max);
        std::vector<AlgebraCensus> serial = census_sweep_serial(k_max);
        std::vector<AlgebraCensus> parallel = census_sweep_parallel(k_max);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CAPTURE(i);
            CHECK(same_census(serial[i], parallel[i]));
        }
    }
}

TEST_CASE("sweep enumerates the admissible algebras in (k, m) order") {
    std::vector<AlgebraCensus> sweep = census_sweep_serial(6);
    REQUIRE(sweep.size() == 11);
    long last_k = 0, last_m = 0;
    for (const AlgebraCensus& census : sweep) {
        CHECK(is_admissible(census.params.m, census.params.k));
        CHECK(census.params.k <= 6);
        bool ordered = census.params.k > last_k ||
                       (census.params.k == last_k && census.params.m > last_m);
        CHECK(ordered);
        last_k = census.params.k;
        last_m = census.params.m;
        // Each entry is exactly the per-algebra census.
        std::vector<CensusRow> direct = classify_unitarizable(census.params);
        REQUIRE(census.rows.size() == direct.size());
        for (std::size_t i = 0; i < census.rows.size(); ++i) {
            CHECK(census.rows[i] == direct[i]);
        }
    }
}

TEST_CASE("invariant suite passes per algebra") {
    for (auto [m, k] : {std::pair<long, long>{1, 2}, {2, 3}, {1, 4}, {3, 10}}) {
        CAPTURE(m);
        CAPTURE(k);
        VerifySummary summary = verify_algebra(m, k);
        CHECK(summary.pass);
        REQUIRE(summary.checks.size() == 4);
        for (const CheckResult& c : summary.checks) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
        CHECK(find_check(summary, "top index table == singular-vector scan") != nullptr);
        CHECK(find_check(summary, "defining relations exact on all modules") != nullptr);
        CHECK(find_check(summary, "central powers vanish / K^{2k} scalar") != nullptr);
        CHECK(find_check(summary, "orthonormal contract on census rows") != nullptr);
    }
}

TEST_CASE("invariant suite compares stored golden matrices") {
    VerifySummary summary = verify_algebra(1, 2, PBQ_FIXTURE_DIR);
    CHECK(summary.pass);
    REQUIRE(summary.checks.size() == 5);
    const CheckResult* golden = find_check(summary, "stored golden matrices reproduced");
    REQUIRE(golden != nullptr);
    CHECK(golden->pass);
    CHECK(golden->detail == "1 file(s) compared");

    VerifySummary dim4 = verify_algebra(3, 10, PBQ_FIXTURE_DIR);
    CHECK(dim4.pass);
    const CheckResult* golden4 = find_check(dim4, "stored golden matrices reproduced");
    REQUIRE(golden4 != nullptr);
    CHECK(golden4->pass);
    CHECK(golden4->detail == "1 file(s) compared");
}

TEST_CASE("corrupted golden matrices are flagged") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "pbq_sweep_corrupt_fixture";
    fs::create_directories(tmp);
    std::string name = fixture_filename(1, 2, 1);
    std::string text = read_text_file((fs::path(PBQ_FIXTURE_DIR) / name).string());
    // Flip the leading digit of the first nonzero mantissa.
    std::size_t pos = text.find("\"re\": \"1.");
    if (pos == std::string::npos) pos = text.find("\"re\": \"0.7");
    REQUIRE(pos != std::string::npos);
    text[pos + 8] = (text[pos + 8] == '1') ? '2' : '1';
    {
        std::ofstream out((tmp / name).string());
        out << text;
    }
    VerifySummary summary = verify_algebra(1, 2, tmp.string());
    const CheckResult* golden = find_check(summary, "stored golden matrices reproduced");
    REQUIRE(golden != nullptr);
    CHECK_FALSE(golden->pass);
    CHECK_FALSE(summary.pass);
    CHECK(golden->detail.find("deviates") != std::string::npos);
    fs::remove_all(tmp);
}

TEST_CASE("verify sweep covers every algebra up to the bound") {
    std::vector<VerifySummary> sweep = verify_sweep(6, PBQ_FIXTURE_DIR);
    REQUIRE(sweep.size() == 11);
    long last_k = 0, last_m = 0;
    for (const VerifySummary& summary : sweep) {
        CAPTURE(summary.m);
        CAPTURE(summary.k);
        CHECK(summary.pass);
        bool ordered = summary.k > last_k || (summary.k == last_k && summary.m > last_m);
        CHECK(ordered);
        last_k = summary.k;
        last_m = summary.m;
        REQUIRE(summary.checks.size() == 5);
        for (const CheckResult& c : summary.checks) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("golden files round-trip through the serializer") {
    namespace fs = std::filesystem;
    long seen = 0;
    for (const auto& entry : fs::directory_iterator(PBQ_FIXTURE_DIR)) {
        if (entry.path().extension() != ".json") continue;
        std::string text = read_text_file(entry.path().string());
        RepMatrices rep = rep_from_json_string(text);
        CHECK(rep.basis_kind == BasisKind::orthonormal);
        std::string again = rep_to_json_string(rep);
        CHECK(again == text);
        ++seen;
    }
    CHECK(seen == 21);
}
