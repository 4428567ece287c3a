#include "pbq/classify.hpp"

#include <algorithm>
#include <numeric>

#include "pbq/algebra.hpp"
#include "pbq/qnum.hpp"

namespace pbq {

namespace {

CaseTag tag_from_reduced(long m, long k) {
    if (k % 2 == 0) return CaseTag::k_even_m_odd;
    return (m % 2 != 0) ? CaseTag::k_odd_m_odd : CaseTag::k_odd_m_even;
}

long positive_mod(long a, long modulus) {
    long r = a % modulus;
    return r < 0 ? r + modulus : r;
}

}  // namespace

std::string case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::k_even_m_odd: return "even_k_odd_m";
        case CaseTag::k_odd_m_odd: return "odd_k_odd_m";
        case CaseTag::k_odd_m_even: return "odd_k_even_m";
    }
    throw Error("unknown case tag");
}

std::string unitary_status_name(UnitaryStatus s) {
    switch (s) {
        case UnitaryStatus::unitarizable: return "unitarizable";
        case UnitaryStatus::not_unitarizable: return "not_unitarizable";
        case UnitaryStatus::boundary: return "boundary";
    }
    throw Error("unknown unitary status");
}

std::string GeneratorMap::describe() const {
    if (!swap_pm && !negate_K) return "identity";
    std::string out;
    if (swap_pm) out += "a+ <-> a-";
    if (negate_K) {
        if (!out.empty()) out += ", ";
        out += "K -> -K";
    }
    return out;
}

bool is_admissible(long m, long k) {
    return k >= 2 && m >= 1 && m <= k - 1 && std::gcd(m, k) == 1;
}

AlgebraParams algebra_params(long m, long k) {
    if (!is_admissible(m, k))
        throw OutOfRangeError("parameters (m=" + std::to_string(m) + ", k=" + std::to_string(k) +
                              ") are not admissible: need k >= 2, 1 <= m <= k-1, gcd(m,k) = 1");
    return AlgebraParams{m, k, tag_from_reduced(m, k), true};
}

AlgebraParams algebra_params_raw(long m, long k) {
    if (k < 1 || m < 1) throw OutOfRangeError("m and k must be positive integers");
    require_q_not_degenerate(m, k);
    long g = std::gcd(m, k);
    return AlgebraParams{m, k, tag_from_reduced(m / g, k / g), is_admissible(m, k)};
}

CanonicalizationResult canonicalize(long m_raw, long k_raw) {
    if (k_raw < 1) throw OutOfRangeError("k must be a positive integer");
    require_q_not_degenerate(m_raw, k_raw);

    long g = std::gcd(std::abs(m_raw), k_raw);
    long m = m_raw / g;
    long k = k_raw / g;

    // The deformation parameter has order dividing 4k in the exponent of m.
    m = positive_mod(m, 4 * k);

    GeneratorMap map;
    if (m > 2 * k) {
        // q -> -q leaves a^+/a^- relations intact and sends K to -K.
        m -= 2 * k;
        map.negate_K = true;
    }
    if (m > k) {
        // q -> -q^{-1} preserves q - q^{-1}, hence swaps the ladder roles.
        m = 2 * k - m;
        map.swap_pm = true;
    }
    return CanonicalizationResult{algebra_params(m, k), map};
}

long integer_window_max(const AlgebraParams& params) {
    if (params.m % 2 != 0) return 4 * params.k;
    return (params.m % 4 == 2) ? 2 * params.k : params.k;
}

long closed_form_L(const AlgebraParams& params, long p) {
    if (!params.admissible) throw OutOfRangeError("closed-form table requires admissible parameters");
    const long k = params.k;
    const long W = integer_window_max(params);
    if (p < 1 || p > W)
        throw OutOfRangeError("integer weight p=" + std::to_string(p) + " outside window (0, " +
                              std::to_string(W) + "]");
    switch (params.tag) {
        case CaseTag::k_even_m_odd:
            if (p % 2 == 0) return (p <= 2 * k) ? 2 * k - p : 4 * k - p;
            if (p <= k - 1) return k - p;
            if (p == k + 1 || p == 3 * k + 1) return 2 * k - 1;
            if (p <= 3 * k - 1) return 3 * k - p;
            return 5 * k - p;
        case CaseTag::k_odd_m_odd:
            if (p % 2 != 0) return k - 1;
            if (p <= k - 1) return k - p;
            if (p == k + 1 || p == 3 * k + 1) return k - 1;
            if (p <= 2 * k) return 2 * k - p;
            if (p <= 3 * k - 1) return 3 * k - p;
            return 4 * k - p;
        case CaseTag::k_odd_m_even:
            if (p % 2 == 0) return 2 * k - p;
            if (p <= k) return k - p;
            // Odd p above k occurs only in the wider window of m = 2 (mod 4).
            return 3 * k - p;
    }
    throw Error("unknown case tag");
}

long generic_L(const AlgebraParams& params) {
    return (params.tag == CaseTag::k_odd_m_odd) ? params.k - 1 : 2 * params.k - 1;
}

Rational normalize_weight(const AlgebraParams& params, const Rational& p) {
    const Rational W(integer_window_max(params));
    Rational reduced = p - W * Rational(floor_of(p / W));
    if (reduced == 0) reduced = W;  // multiples of W (p = 0 included) fold to the top edge
    return reduced;
}

Scalar casimir_eigenvalue(const AlgebraParams& params, const Weight& p) {
    const long m = params.m;
    const long k = params.k;
    if (p.is_exact()) {
        const Rational e = 2 * p.rational() - 2;
        CyclotomicNumber val = (q_power(m, k, e) + q_power(m, k, -e)) * CyclotomicNumber::from_rational(make_rational(1, 2));
        return Scalar(val + CyclotomicNumber::from_long(2));
    }
    // cos(theta*(2p-2)) + 2 continued to complex weights.
    const ApproxComplex& w = p.approx();
    const unsigned digits = w.digits;
    const unsigned working = digits + kGuardDigits;
    Real theta = pi_at(working) * real_from_rational(make_rational(m, 2 * k), working);
    Real x = theta * (2 * w.re - 2);
    Real y = theta * (2 * w.im);
    return Scalar(approx_from_parts(cos(x) * cosh(y) + 2, -(sin(x) * sinh(y)), digits));
}

std::vector<IrrepDescriptor> vacuum_irreps(const AlgebraParams& params,
                                           const std::vector<Rational>& nonint_samples) {
    if (!params.admissible) throw OutOfRangeError("classification requires admissible parameters");

    std::vector<IrrepDescriptor> out;
    auto emit = [&](const Rational& p, long L) {
        IrrepDescriptor d;
        d.params = params;
        d.p = Weight::from_rational(p);
        d.L = L;
        d.K_spectrum.reserve(static_cast<std::size_t>(L) + 1);
        for (long n = 0; n <= L; ++n)
            d.K_spectrum.push_back(Scalar(q_power(params.m, params.k, Rational(2 * n) + p)));
        d.casimir = casimir_eigenvalue(params, d.p);
        out.push_back(std::move(d));
    };

    const long W = integer_window_max(params);
    for (long p = 1; p <= W; ++p) emit(Rational(p), closed_form_L(params, p));
    for (const Rational& sample : nonint_samples) {
        if (is_integer(sample))
            throw OutOfRangeError("sample grid must contain non-integer weights, got " + to_string(sample));
        emit(normalize_weight(params, sample), generic_L(params));
    }

    std::sort(out.begin(), out.end(), [](const IrrepDescriptor& a, const IrrepDescriptor& b) {
        if (a.p.rational() != b.p.rational()) return a.p.rational() < b.p.rational();
        return a.L < b.L;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const IrrepDescriptor& a, const IrrepDescriptor& b) {
                              return a.p.rational() == b.p.rational() && a.L == b.L;
                          }),
              out.end());
    return out;
}

std::optional<IntertwinerCertificate> find_intertwiner(const ModuleSpec& source,
                                                       const ModuleSpec& target) {
    if (!source.finite() || !target.finite())
        throw OutOfRangeError("equivalence testing requires finite modules");
    if (source.m != target.m || source.k != target.k) return std::nullopt;
    if (source.dimension() != target.dimension()) return std::nullopt;
    if (source.p.is_exact() != target.p.is_exact())
        throw VariantMixError("cannot compare exact and approximate weights");

    IntertwinerCertificate cert;
    cert.source = source;
    cert.target = target;
    cert.index_shift = target.n_lo - source.n_lo;
    if (source.p.is_exact()) cert.weight_shift = target.p.rational() - source.p.rational();

    // phi(|p;n_lo+n>) = |p';n_lo'+n> intertwines a^+ automatically (unit shift,
    // annihilation at both tops). Check K and a^- coefficient-wise.
    const long L = source.dimension() - 1;
    for (long n = 0; n <= L; ++n) {
        ActionResult ks = verma_action(source, Generator::K, source.n_lo + n);
        ActionResult kt = verma_action(target, Generator::K, target.n_lo + n);
        if (!(ks.coefficient == kt.coefficient)) return std::nullopt;
        if (n == 0) continue;
        ActionResult as = verma_action(source, Generator::Aminus, source.n_lo + n);
        ActionResult at = verma_action(target, Generator::Aminus, target.n_lo + n);
        if (!(as.coefficient == at.coefficient)) return std::nullopt;
    }
    cert.verified = true;
    return cert;
}

CentralReport central_checks(const IrrepDescriptor& desc) {
    const AlgebraParams& pa = desc.params;
    ModuleSpec spec{pa.m, pa.k, desc.p, 0, desc.L};
    RepMatrices rep = module_matrices(spec);

    CentralReport report;
    const unsigned long power = static_cast<unsigned long>(4 * pa.k);
    report.aplus_power_zero = pow(rep.A_plus, power).is_zero();
    report.aminus_power_zero = pow(rep.A_minus, power).is_zero();
    Scalar value;
    report.k_power_scalar = pow(rep.Kmat, static_cast<unsigned long>(2 * pa.k)).is_scalar(&value);
    if (report.k_power_scalar) report.k_scalar = value;
    return report;
}

}  // namespace pbq
