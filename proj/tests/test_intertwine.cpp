#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "pbq/classify.hpp"
#include "pbq/errors.hpp"

using namespace pbq;

namespace {

ModuleSpec mod(long m, long k, const Rational& p, long n_lo, long n_hi) {
    return ModuleSpec{m, k, Weight::from_rational(p), n_lo, n_hi};
}

ModuleSpec mod(long m, long k, long p, long n_lo, long n_hi) {
    return mod(m, k, make_rational(p), n_lo, n_hi);
}

void expect_equivalent(const ModuleSpec& src, const ModuleSpec& tgt) {
    auto cert = find_intertwiner(src, tgt);
    INFO("m=", src.m, " k=", src.k, " src p=", src.p.to_string(), " [", src.n_lo, ",",
         *src.n_hi, "]  tgt p=", tgt.p.to_string(), " [", tgt.n_lo, ",", *tgt.n_hi, "]");
    REQUIRE(cert.has_value());
    REQUIRE(cert->verified);
    REQUIRE(cert->index_shift == tgt.n_lo - src.n_lo);
    REQUIRE(cert->weight_shift == tgt.p.rational() - src.p.rational());
}

void expect_none(const ModuleSpec& src, const ModuleSpec& tgt) {
    INFO("m=", src.m, " k=", src.k, " src p=", src.p.to_string(), " tgt p=",
         tgt.p.to_string());
    REQUIRE_FALSE(find_intertwiner(src, tgt).has_value());
}

std::vector<std::pair<long, long>> admissible_upto(long k_max) {
    std::vector<std::pair<long, long>> out;
    for (long k = 2; k <= k_max; ++k)
        for (long m = 1; m < k; ++m)
            if (is_admissible(m, k)) out.emplace_back(m, k);
    return out;
}

}  // namespace

TEST_CASE("window-shift equivalence of the 2k-dimensional modules, k even") {
    for (auto [m, k] : admissible_upto(7)) {
        if (k % 2 != 0) continue;
        for (Rational p : {make_rational(1, 2), make_rational(k + 1), make_rational(5, 3)}) {
            for (auto [s, N] : {std::pair<long, long>{0, 1}, {1, 0}, {2, 3}, {-1, 2}}) {
                ModuleSpec src = mod(m, k, p, 0, 2 * k - 1);
                ModuleSpec tgt = mod(m, k, p + Rational(4 * k * s), 2 * k * N,
                                     2 * k * N + 2 * k - 1);
                expect_equivalent(src, tgt);
            }
        }
    }
}

TEST_CASE("subspace-to-factor equivalences, k even, even weights") {
    for (auto [m, k] : admissible_upto(7)) {
        if (k % 2 != 0) continue;
        // invariant subspace of the 2k-window at p matches the vacuum module at 4k-p+2
        for (long p = 2; p <= 2 * k; p += 2)
            expect_equivalent(mod(m, k, p, 2 * k - p + 1, 2 * k - 1),
                              mod(m, k, 4 * k - p + 2, 0, p - 2));
        for (long p = 2 * k + 2; p <= 4 * k; p += 2)
            expect_equivalent(mod(m, k, p, 4 * k - p + 1, 2 * k - 1),
                              mod(m, k, 4 * k - p + 2, 0, p - 2 * k - 2));
    }
}

TEST_CASE("subspace-to-factor equivalences, k even, odd weights") {
    for (auto [m, k] : admissible_upto(7)) {
        if (k % 2 != 0) continue;
        for (long p = 1; p <= k - 1; p += 2)
            expect_equivalent(mod(m, k, p, k - p + 1, 2 * k - 1),
                              mod(m, k, 2 * k - p + 2, 0, k + p - 2));
        for (long p = k + 3; p <= 2 * k + 1; p += 2)
            expect_equivalent(mod(m, k, p, 3 * k - p + 1, 2 * k - 1),
                              mod(m, k, 2 * k - p + 2, 0, p - k - 2));
        for (long p = 2 * k + 3; p <= 3 * k - 1; p += 2)
            expect_equivalent(mod(m, k, p, 3 * k - p + 1, 2 * k - 1),
                              mod(m, k, 6 * k - p + 2, 0, p - k - 2));
        for (long p = 3 * k + 3; p <= 4 * k - 1; p += 2)
            expect_equivalent(mod(m, k, p, 5 * k - p + 1, 2 * k - 1),
                              mod(m, k, 6 * k - p + 2, 0, p - 3 * k - 2));
    }
}

TEST_CASE("half-window shift equivalence, k odd with odd m") {
    for (auto [m, k] : admissible_upto(7)) {
        if (k % 2 == 0 || m % 2 == 0) continue;
        // vacuum k-window at p matches the shifted sub-window at p +- 2k
        for (Rational p : {make_rational(1, 2), make_rational(1), make_rational(k),
                           make_rational(2 * k), make_rational(7, 4)}) {
            expect_equivalent(mod(m, k, p, 0, k - 1),
                              mod(m, k, p + Rational(2 * k), k, 2 * k - 1));
        }
        for (Rational p : {Rational(make_rational(2 * k) + make_rational(1, 2)),
                           make_rational(3 * k), make_rational(4 * k)}) {
            expect_equivalent(mod(m, k, p, 0, k - 1),
                              mod(m, k, p - Rational(2 * k), k, 2 * k - 1));
        }
    }
}

TEST_CASE("subspace-to-factor equivalences, k odd with odd m, even weights") {
    for (auto [m, k] : admissible_upto(7)) {
        if (k % 2 == 0 || m % 2 == 0) continue;
        for (long p = 2; p <= k - 1; p += 2)
            expect_equivalent(mod(m, k, p, k - p + 1, k - 1),
                              mod(m, k, 2 * k - p + 2, 0, p - 2));
        for (long p = k + 3; p <= 2 * k; p += 2)
            expect_equivalent(mod(m, k, p, 2 * k - p + 1, k - 1),
                              mod(m, k, 4 * k - p + 2, 0, p - k - 2));
        for (long p = 2 * k + 2; p <= 3 * k - 1; p += 2)
            expect_equivalent(mod(m, k, p, 3 * k - p + 1, k - 1),
                              mod(m, k, 6 * k - p + 2, 0, p - 2 * k - 2));
        for (long p = 3 * k + 3; p <= 4 * k; p += 2)
            expect_equivalent(mod(m, k, p, 4 * k - p + 1, k - 1),
                              mod(m, k, 4 * k - p + 2, 0, p - 3 * k - 2));
    }
}

TEST_CASE("window-shift equivalences, k odd with even m") {
    for (auto [m, k] : admissible_upto(7)) {
        if (k % 2 == 0 || m % 2 != 0) continue;
        for (Rational p : {make_rational(1, 2), make_rational(1), make_rational(k),
                           make_rational(2 * k), make_rational(11, 7)}) {
            expect_equivalent(mod(m, k, p, 0, 2 * k - 1),
                              mod(m, k, p + Rational(2 * k), 0, 2 * k - 1));
        }
        if (m % 4 == 0) {
            for (Rational p : {make_rational(1, 2), make_rational(1), make_rational(k)}) {
                expect_equivalent(mod(m, k, p, 0, 2 * k - 1),
                                  mod(m, k, p + Rational(k), 0, 2 * k - 1));
            }
        }
    }
}

TEST_CASE("subspace-to-factor equivalences, k odd with even m") {
    for (auto [m, k] : admissible_upto(7)) {
        if (k % 2 == 0 || m % 2 != 0) continue;

        // weight 1: the upper half-window carries the vacuum representation again
        expect_equivalent(mod(m, k, 1, k, 2 * k - 1), mod(m, k, 1, 0, k - 1));

        if (m % 4 == 2) {
            for (long p = 3; p <= k; p += 2)
                expect_equivalent(mod(m, k, p, k - p + 1, 2 * k - 1),
                                  mod(m, k, 2 * k - p + 2, 0, k + p - 2));
            for (long p = k + 2; p <= 2 * k - 1; p += 2)
                expect_equivalent(mod(m, k, p, 3 * k - p + 1, 2 * k - 1),
                                  mod(m, k, 2 * k - p + 2, 0, p - k - 2));
        } else {
            for (long p = 3; p <= k; p += 2)
                expect_equivalent(mod(m, k, p, k - p + 1, 2 * k - 1),
                                  mod(m, k, k - p + 2, 0, k + p - 2));
        }
        for (long p = 2; p <= 2 * k; p += 2)
            expect_equivalent(mod(m, k, p, 2 * k - p + 1, 2 * k - 1),
                              mod(m, k, 2 * k - p + 2, 0, p - 2));
    }
}

TEST_CASE("certificates refuse inequivalent modules") {
    SUBCASE("equal dimension, different K spectrum") {
        // the four same-Casimir vacuum modules pair off into two dimensions;
        // within a dimension the K spectra differ
        long k = 2, p = 2;
        expect_none(mod(1, k, p, 0, 2 * k - p), mod(1, k, p + 2 * k, 0, 2 * k - p));
        expect_none(mod(1, k, 2 * k - p + 2, 0, p - 2), mod(1, k, 4 * k - p + 2, 0, p - 2));
        expect_none(mod(1, 4, 2, 0, 6), mod(1, 4, 10, 0, 6));
    }

    SUBCASE("different dimensions") {
        expect_none(mod(1, 2, 1, 0, 1), mod(1, 2, 1, 0, 3));
        expect_none(mod(1, 2, 2, 0, 2), mod(1, 2, 8, 0, 0));
    }

    SUBCASE("different algebras") {
        expect_none(mod(1, 2, 1, 0, 1), mod(1, 3, 1, 0, 1));
        expect_none(mod(1, 4, 1, 0, 1), mod(3, 4, 1, 0, 1));
    }

    SUBCASE("identity certificate on equal specs") {
        ModuleSpec spec = mod(1, 3, 2, 0, 1);
        auto cert = find_intertwiner(spec, spec);
        REQUIRE(cert.has_value());
        CHECK(cert->verified);
        CHECK(cert->index_shift == 0);
        CHECK(cert->weight_shift == Rational(0));
    }

    SUBCASE("infinite modules are rejected") {
        ModuleSpec finite = mod(1, 2, 1, 0, 1);
        ModuleSpec infinite{1, 2, Weight::from_rational(make_rational(1)), 0, std::nullopt};
        CHECK_THROWS_AS(find_intertwiner(finite, infinite), OutOfRangeError);
        CHECK_THROWS_AS(find_intertwiner(infinite, finite), OutOfRangeError);
    }

    SUBCASE("mixing exact and numeric weights is refused") {
        ModuleSpec exact = mod(1, 2, 1, 0, 3);
        ModuleSpec numeric{1, 2, Weight::from_approx(approx_from_strings("1", "0", 64)), 0, 3};
        CHECK_THROWS_AS(find_intertwiner(exact, numeric), VariantMixError);
    }
}

TEST_CASE("shifting the weight by less than a full period breaks the certificate") {
    // p -> p + 2k flips the K spectrum sign when m is odd: no intertwiner
    for (auto [m, k] : {std::pair<long, long>{1, 2}, {1, 3}}) {
        Rational p = make_rational(1, 2);
        ModuleSpec src = mod(m, k, p, 0, 2 * k - 1);
        ModuleSpec tgt = mod(m, k, p + Rational(2 * k), 0, 2 * k - 1);
        expect_none(src, tgt);
    }
}
