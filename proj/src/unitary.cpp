#include "pbq/unitary.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pbq/angle.hpp"
#include "pbq/qnum.hpp"

namespace pbq {

namespace {

// Exact sign of the squared rescaling ratio at rung n, as a product of the
// signs of its three trig factors. Integer arithmetic only.
int ladder_sign(long m, long k, const Rational& p, long n) {
    const Rational scale = make_rational(m, 2 * k);
    Rational sin_arg, cos_arg;
    if (n % 2 == 0) {
        sin_arg = scale * (Rational(n) + p);
        cos_arg = scale * Rational(n + 1);
    } else {
        sin_arg = scale * Rational(n + 1);
        cos_arg = scale * (Rational(n) + p);
    }
    return trig_sign({sin_arg}, TrigKind::sin) * trig_sign({cos_arg}, TrigKind::cos) *
           trig_sign({make_rational(m, k)}, TrigKind::sin);
}

const Rational& require_real_weight(const Weight& p) {
    if (!p.is_exact())
        throw UnsupportedWeightError(
            "unitarity requires a real rational weight: K needs a unimodular "
            "spectrum for K^dagger = K^-1");
    return p.rational();
}

}  // namespace

NormalizationLadder unitarity_ratios(const AlgebraParams& params, const Weight& p, long L) {
    const Rational& pr = require_real_weight(p);
    if (L < 0) throw OutOfRangeError("top index must be nonnegative");

    NormalizationLadder ladder;
    ladder.params = params;
    ladder.p = p;
    ladder.L = L;
    ladder.entries.reserve(static_cast<std::size_t>(L));
    for (long n = 0; n < L; ++n) {
        // The ratio coincides with the lowering coefficient one rung up.
        LadderEntry entry;
        entry.n = n;
        entry.value = lowering_coefficient(params.m, params.k, p, n + 1).exact();
        entry.sign = ladder_sign(params.m, params.k, pr, n);
        ladder.entries.push_back(std::move(entry));
    }
    return ladder;
}

UnitarityVerdict is_unitarizable(const AlgebraParams& params, const Weight& p, long L) {
    const Rational& pr = require_real_weight(p);
    if (L < 0) throw OutOfRangeError("top index must be nonnegative");

    UnitarityVerdict verdict;
    verdict.witness_signs.reserve(static_cast<std::size_t>(L));
    for (long n = 0; n < L; ++n) {
        int s = ladder_sign(params.m, params.k, pr, n);
        verdict.witness_signs.push_back(s);
        if (s < 0 && !verdict.first_negative) verdict.first_negative = n;
        if (s == 0 && !verdict.first_zero) verdict.first_zero = n;
    }
    if (verdict.first_negative)
        verdict.status = UnitaryStatus::not_unitarizable;
    else if (verdict.first_zero)
        verdict.status = UnitaryStatus::boundary;
    else
        verdict.status = UnitaryStatus::unitarizable;
    return verdict;
}

std::vector<CensusRow> classify_unitarizable(const AlgebraParams& params,
                                             const std::vector<Rational>& p_grid) {
    if (!params.admissible) throw OutOfRangeError("the census requires admissible parameters");
    const long W = integer_window_max(params);
    const long L_generic = generic_L(params);

    // Normalized weight grid; integer weights are always present so the
    // classified short modules are never skipped.
    std::set<Rational> grid;
    if (p_grid.empty()) {
        for (long twice = 1; twice <= 2 * W; ++twice) grid.insert(make_rational(twice, 2));
    } else {
        for (const Rational& point : p_grid) grid.insert(normalize_weight(params, point));
        for (long p = 1; p <= W; ++p) grid.insert(Rational(p));
    }

    std::vector<CensusRow> rows;
    auto consider = [&](const Rational& p, long L) {
        if (L < 1) return;  // 1-dim modules carry no unitarity content
        UnitarityVerdict verdict = is_unitarizable(params, Weight::from_rational(p), L);
        if (verdict.status == UnitaryStatus::not_unitarizable) return;
        rows.push_back(CensusRow{p, L, verdict.status});
    };
    for (const Rational& p : grid) {
        // Integer weights: the simple module of the classification tables.
        if (is_integer(p)) consider(p, closed_form_L(params, to_long(p)));
        // Every weight: the generic-top module, realizing the continuous
        // families of the census together with their endpoints.
        consider(p, L_generic);
    }

    std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.L < b.L;
    });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const CensusRow& a, const CensusRow& b) {
                               return a.p == b.p && a.L == b.L;
                           }),
               rows.end());
    return rows;
}

RepMatrices orthonormal_matrices(const AlgebraParams& params, const Weight& p, long L,
                                 unsigned precision) {
    if (precision < kMinDigits)
        throw OutOfRangeError("precision below the " + std::to_string(kMinDigits) +
                              "-digit minimum");
    UnitarityVerdict verdict = is_unitarizable(params, p, L);
    if (verdict.status != UnitaryStatus::unitarizable) {
        std::string reason =
            verdict.first_negative
                ? "negative squared norm ratio at n = " + std::to_string(*verdict.first_negative)
                : "degenerate norm at n = " + std::to_string(verdict.first_zero.value_or(0));
        throw NotUnitarizableError("module (p=" + p.to_string() + ", L=" + std::to_string(L) +
                                   ") admits no orthonormal basis: " + reason);
    }

    const unsigned working = precision + kGuardDigits;
    const Rational scale = make_rational(params.m, 2 * params.k);
    const auto dim = static_cast<std::size_t>(L + 1);

    RepMatrices rep;
    rep.spec = ModuleSpec{params.m, params.k, p, 0, L};
    rep.basis_kind = BasisKind::orthonormal;
    rep.basis_labels.resize(dim);
    for (std::size_t n = 0; n < dim; ++n) rep.basis_labels[n] = static_cast<long>(n);

    const Scalar zero(approx_zero(precision));
    rep.A_plus = Matrix::zero(dim, dim, zero);
    rep.A_minus = Matrix::zero(dim, dim, zero);
    rep.Kmat = Matrix::zero(dim, dim, zero);
    rep.Kinv = Matrix::zero(dim, dim, zero);

    NormalizationLadder ladder = unitarity_ratios(params, p, L);
    const Real im_zero = real_from_long(0, precision);
    for (long n = 0; n < L; ++n) {
        ApproxComplex value = ladder.entries[static_cast<std::size_t>(n)].value.to_complex(working);
        Scalar entry(approx_from_parts(sqrt(value.re), im_zero, precision));
        // One shared value: a^+ is the transpose of a^- entry for entry.
        rep.A_minus.at(static_cast<std::size_t>(n), static_cast<std::size_t>(n) + 1) = entry;
        rep.A_plus.at(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n)) = entry;
    }
    for (long n = 0; n <= L; ++n) {
        Rational exponent = scale * (Rational(2 * n) + p.rational());
        auto idx = static_cast<std::size_t>(n);
        rep.Kmat.at(idx, idx) = Scalar(approx_unit_phase(exponent, precision));
        rep.Kinv.at(idx, idx) = Scalar(approx_unit_phase(-exponent, precision));
    }
    return rep;
}

UnitarityReport verify_unitarity(const RepMatrices& rep, unsigned precision) {
    if (precision < kMinDigits)
        throw OutOfRangeError("precision below the " + std::to_string(kMinDigits) +
                              "-digit minimum");
    const unsigned working = precision + kGuardDigits;
    const Real tolerance =
        pow(real_from_long(10, working), 1 - static_cast<int>(precision));

    UnitarityReport report;
    report.basis_ok = rep.basis_kind == BasisKind::orthonormal;

    Real adjoint_dev = (dagger(rep.A_minus) - rep.A_plus).max_abs(working);
    Real k_dev = (dagger(rep.Kmat) - rep.Kinv).max_abs(working);
    report.adjoint_pair = adjoint_dev < tolerance;
    report.k_unitary = k_dev < tolerance;
    report.relations = verify_relations(rep, tolerance);

    report.max_deviation = adjoint_dev;
    if (k_dev > report.max_deviation) report.max_deviation = k_dev;
    if (report.relations.max_residual > report.max_deviation)
        report.max_deviation = report.relations.max_residual;
    report.pass =
        report.basis_ok && report.adjoint_pair && report.k_unitary && report.relations.pass;
    return report;
}

}  // namespace pbq
