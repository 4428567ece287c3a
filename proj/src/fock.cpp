#include "pbq/fock.hpp"

#include <sstream>

#include "pbq/angle.hpp"
#include "pbq/errors.hpp"

namespace pbq {

const Rational& Weight::rational() const {
    if (!rational_) throw VariantMixError("weight is approximate, no exact rational value");
    return *rational_;
}

const ApproxComplex& Weight::approx() const {
    if (!approx_) throw VariantMixError("weight is exact, no approximate value");
    return *approx_;
}

std::string Weight::to_string() const {
    if (is_exact()) return pbq::to_string(rational());
    const auto& z = approx();
    std::ostringstream os;
    os << decimal_string(z.re, z.digits);
    if (!(abs(z.im) < approx_zero_tolerance()))
        os << (z.im < 0 ? "" : "+") << decimal_string(z.im, z.digits) << "i";
    return os.str();
}

bool operator==(const Weight& a, const Weight& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) return a.rational() == b.rational();
    return is_zero(a.approx() - b.approx());
}

long ModuleSpec::dimension() const {
    if (!finite()) throw OutOfRangeError("infinite module has no dimension");
    return *n_hi - n_lo + 1;
}

namespace {

void check_index(const ModuleSpec& spec, long n) {
    if (n < spec.n_lo || (spec.finite() && n > *spec.n_hi))
        throw OutOfRangeError("basis index outside the module range");
}

// Complex sine/cosine from real mpfr parts: sin(a+bi), cos(a+bi).
ApproxComplex complex_sin(const ApproxComplex& z) {
    return approx_from_parts(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im), z.digits);
}
ApproxComplex complex_cos(const ApproxComplex& z) {
    return approx_from_parts(cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im), z.digits);
}

// Approximate K eigenvalue e^{i theta (2n+p)} for complex p, theta = pi m/(2k).
Scalar k_eigenvalue_approx(long m, long k, const ApproxComplex& p, long n, bool invert) {
    unsigned digits = p.digits;
    unsigned working = digits + kGuardDigits;
    Real theta = pi_at(working) * real_from_rational(make_rational(m, 2 * k), working);
    if (invert) theta = -theta;
    Real phase = theta * (p.re + 2 * n);
    Real damp = exp(-theta * p.im);
    return Scalar(approx_from_parts(damp * cos(phase), damp * sin(phase), digits));
}

// Lowering coefficient with everything numeric: q = e^{i theta}.
ApproxComplex lowering_numeric(const Real& theta, const ApproxComplex& p, long n,
                               unsigned digits) {
    unsigned working = digits + kGuardDigits;
    Real sin_t = sin(theta), cos_t = cos(theta);
    auto scaled = [&](const ApproxComplex& x) {
        return approx_from_parts(x.re * theta, x.im * theta, digits);
    };
    ApproxComplex npm1 = approx_from_parts(p.re + (n - 1), p.im, digits);  // n + p - 1
    ApproxComplex nn = approx_from_parts(real_from_long(n, working), real_from_long(0, working),
                                         digits);
    ApproxComplex bracket, brace;
    if (n % 2 == 0) {
        bracket = complex_sin(scaled(nn));    // [n]
        brace = complex_cos(scaled(npm1));    // {n+p-1}
    } else {
        bracket = complex_sin(scaled(npm1));  // [n+p-1]
        brace = complex_cos(scaled(nn));      // {n}
    }
    ApproxComplex denom = approx_from_parts(sin_t * cos_t, real_from_long(0, working), digits);
    return bracket * brace / denom;
}

}  // namespace

Scalar lowering_coefficient(long m, long k, const Weight& p, long n) {
    if (n <= 0) {
        if (n < 0) throw OutOfRangeError("negative basis index");
        return p.is_exact() ? Scalar::exact_long(0) : Scalar(approx_zero(p.digits()));
    }
    if (p.is_exact()) {
        require_q_not_degenerate(m, k);
        const Rational& pr = p.rational();
        if (n % 2 == 0)
            return Scalar(q_bracket(m, k, n) * q_brace(m, k, Rational(n - 1) + pr));
        return Scalar(q_bracket(m, k, Rational(n - 1) + pr) * q_brace(m, k, n));
    }
    unsigned digits = p.digits();
    unsigned working = digits + kGuardDigits;
    Real theta = pi_at(working) * real_from_rational(make_rational(m, 2 * k), working);
    return Scalar(lowering_numeric(theta, p.approx(), n, digits));
}

ActionResult verma_action(const ModuleSpec& spec, Generator g, long n) {
    check_index(spec, n);
    require_q_not_degenerate(spec.m, spec.k);
    const bool exact = spec.p.is_exact();
    const Scalar zero = exact ? Scalar::exact_long(0) : Scalar(approx_zero(spec.p.digits()));
    switch (g) {
        case Generator::K:
        case Generator::Kinv: {
            bool invert = g == Generator::Kinv;
            if (exact) {
                Rational e = Rational(2 * n) + spec.p.rational();
                if (invert) e = -e;
                return {Scalar(q_power(spec.m, spec.k, e)), n};
            }
            return {k_eigenvalue_approx(spec.m, spec.k, spec.p.approx(), n, invert), n};
        }
        case Generator::Aplus: {
            if (spec.finite() && n == *spec.n_hi) return {zero, std::nullopt};
            return {exact ? Scalar::exact_long(1) : Scalar(approx_from_rational(Rational(1), spec.p.digits())),
                    n + 1};
        }
        case Generator::Aminus: {
            if (n == spec.n_lo) return {zero, std::nullopt};
            return {lowering_coefficient(spec.m, spec.k, spec.p, n), n - 1};
        }
    }
    throw Error("unreachable generator");
}

namespace {

// Exact vanishing test of the factors of the lowering coefficient, by the sign
// of sin/cos at rational multiples of pi.
std::vector<std::string> exact_vanished_factors(long m, long k, const Rational& p, long n) {
    Rational scale = make_rational(m, 2 * k);
    std::vector<std::string> out;
    Rational npm1 = (Rational(n - 1) + p) * scale;
    if (n % 2 == 0) {
        if (trig_is_zero(RationalAngle{Rational(n) * scale}, TrigKind::sin)) out.push_back("[n]");
        if (trig_is_zero(RationalAngle{npm1}, TrigKind::cos)) out.push_back("{n+p-1}");
    } else {
        if (trig_is_zero(RationalAngle{npm1}, TrigKind::sin)) out.push_back("[n+p-1]");
        if (trig_is_zero(RationalAngle{Rational(n) * scale}, TrigKind::cos)) out.push_back("{n}");
    }
    return out;
}

}  // namespace

SingularVectorReport singular_vectors(long m, long k, const Weight& p, long n_max) {
    if (n_max < 1) throw OutOfRangeError("scan range must cover n >= 1");
    require_q_not_degenerate(m, k);
    SingularVectorReport report;
    report.n_max = n_max;
    report.singular.push_back({0, {"[n]"}});
    if (p.is_exact()) {
        for (long n = 1; n <= n_max; ++n) {
            auto factors = exact_vanished_factors(m, k, p.rational(), n);
            if (!factors.empty()) report.singular.push_back({n, std::move(factors)});
        }
        return report;
    }
    report.tolerance_based = true;
    unsigned digits = p.digits();
    Real tol = pow(real_from_long(10, digits), -static_cast<long>(digits / 2));
    unsigned working = digits + kGuardDigits;
    Real theta = pi_at(working) * real_from_rational(make_rational(m, 2 * k), working);
    for (long n = 1; n <= n_max; ++n) {
        if (abs(lowering_numeric(theta, p.approx(), n, digits)) < tol)
            report.singular.push_back({n, {n % 2 == 0 ? "[n]*{n+p-1}" : "[n+p-1]*{n}"}});
    }
    return report;
}

SingularVectorReport singular_vectors(const Real& theta, const Real& p, long n_max,
                                      unsigned digits) {
    if (n_max < 1) throw OutOfRangeError("scan range must cover n >= 1");
    SingularVectorReport report;
    report.n_max = n_max;
    report.tolerance_based = true;
    report.singular.push_back({0, {"[n]"}});
    Real tol = pow(real_from_long(10, digits), -static_cast<long>(digits / 2));
    ApproxComplex pc = approx_from_parts(p, real_from_long(0, digits), digits);
    for (long n = 1; n <= n_max; ++n) {
        if (abs(lowering_numeric(theta, pc, n, digits)) < tol)
            report.singular.push_back({n, {n % 2 == 0 ? "[n]*{n+p-1}" : "[n+p-1]*{n}"}});
    }
    return report;
}

RepMatrices module_matrices(const ModuleSpec& spec) {
    if (!spec.finite()) throw OutOfRangeError("matrix form requires a finite basis range");
    require_q_not_degenerate(spec.m, spec.k);
    long dim = spec.dimension();
    const bool exact = spec.p.is_exact();
    const Scalar zero = exact ? Scalar::exact_long(0) : Scalar(approx_zero(spec.p.digits()));
    RepMatrices rep;
    rep.spec = spec;
    rep.basis_kind = BasisKind::verma;
    rep.basis_labels.resize(static_cast<std::size_t>(dim));
    for (long t = 0; t < dim; ++t) rep.basis_labels[static_cast<std::size_t>(t)] = spec.n_lo + t;

    auto sz = static_cast<std::size_t>(dim);
    rep.A_plus = Matrix::zero(sz, sz, zero);
    rep.A_minus = Matrix::zero(sz, sz, zero);
    rep.Kmat = Matrix::zero(sz, sz, zero);
    rep.Kinv = Matrix::zero(sz, sz, zero);

    for (long n = spec.n_lo; n <= *spec.n_hi; ++n) {
        auto col = static_cast<std::size_t>(n - spec.n_lo);
        rep.Kmat.at(col, col) = verma_action(spec, Generator::K, n).coefficient;
        rep.Kinv.at(col, col) = verma_action(spec, Generator::Kinv, n).coefficient;
        if (n < *spec.n_hi)
            rep.A_plus.at(col + 1, col) = verma_action(spec, Generator::Aplus, n).coefficient;
        if (n > spec.n_lo)
            rep.A_minus.at(col - 1, col) = verma_action(spec, Generator::Aminus, n).coefficient;
    }
    return rep;
}

ModuleSpec quotient_module(const ModuleSpec& spec, long cut) {
    if (cut <= spec.n_lo || (spec.finite() && cut > *spec.n_hi + 1))
        throw InvalidQuotientError("cut outside (n_lo, n_hi+1]");
    if (!lowering_coefficient(spec.m, spec.k, spec.p, cut).is_zero())
        throw InvalidQuotientError("cut index does not carry a singular vector");
    ModuleSpec out = spec;
    out.n_hi = cut - 1;
    return out;
}

Matrix evaluate_element(const AlgebraElement& e, const RepMatrices& rep) {
    if (e.context().m != rep.spec.m || e.context().k != rep.spec.k)
        throw MismatchError("element and module bound to different (m,k)");
    auto dim = static_cast<std::size_t>(rep.spec.dimension());
    const Scalar& probe = rep.Kmat.at(0, 0);
    const bool exact_rep = probe.is_exact();
    Matrix acc = Matrix::zero(dim, dim, probe.zero_like());
    for (const auto& [key, coeff] : e.terms()) {
        Matrix term = Matrix::identity(dim, probe.one_like());
        if (key.i > 0) term = term * pow(rep.A_plus, static_cast<unsigned long>(key.i));
        if (key.j > 0) term = term * pow(rep.A_minus, static_cast<unsigned long>(key.j));
        if (key.s > 0) term = term * pow(rep.Kmat, static_cast<unsigned long>(key.s));
        if (key.s < 0) term = term * pow(rep.Kinv, static_cast<unsigned long>(-key.s));
        Scalar c = coeff;
        if (!exact_rep && c.is_exact()) c = Scalar::downgrade(c, probe.digits());
        acc = acc + c * term;
    }
    return acc;
}

RelationReport verify_relations(const RepMatrices& rep) {
    return verify_relations(rep, approx_zero_tolerance());
}

RelationReport verify_relations(const RepMatrices& rep, const Real& tolerance) {
    // A representation counts as exact only when every entry is; orthonormal
    // matrices mix an exact diagonal K with approximate ladder entries.
    bool exact = true;
    unsigned digits = kDefaultDigits;
    for (const Matrix* mat : {&rep.A_plus, &rep.A_minus, &rep.Kmat, &rep.Kinv})
        for (std::size_t r = 0; exact && r < mat->rows(); ++r)
            for (std::size_t c = 0; exact && c < mat->cols(); ++c)
                if (!mat->at(r, c).is_exact()) {
                    exact = false;
                    digits = mat->at(r, c).digits();
                }
    const Scalar& probe = rep.Kmat.at(0, 0);

    Scalar q2, qm2, denom_inv;
    if (exact) {
        q2 = Scalar(q_power(rep.spec.m, rep.spec.k, 2));
        qm2 = Scalar(q_power(rep.spec.m, rep.spec.k, -2));
        denom_inv = Scalar::exact_long(1) /
                    Scalar(q_power(rep.spec.m, rep.spec.k, 1) - q_power(rep.spec.m, rep.spec.k, -1));
    } else {
        Rational mk = make_rational(rep.spec.m, rep.spec.k);
        q2 = Scalar(approx_unit_phase(mk, digits));
        qm2 = Scalar(approx_unit_phase(-mk, digits));
        ApproxComplex q1 = approx_unit_phase(mk / 2, digits);
        ApproxComplex q1i = approx_unit_phase(-mk / 2, digits);
        denom_inv = Scalar(approx_from_rational(Rational(1), digits) / (q1 - q1i));
    }

    auto dim = static_cast<std::size_t>(rep.spec.dimension());
    Matrix eye = Matrix::identity(dim, probe.one_like());

    RelationReport report;
    report.exact_mode = exact;
    report.max_residual = real_from_long(0, digits);
    auto add_check = [&](const std::string& name, const Matrix& residual) {
        bool ok;
        Real mag = real_from_long(0, digits);
        if (exact) {
            ok = residual.is_zero();
            if (!ok) mag = residual.max_abs(digits);
        } else {
            mag = residual.max_abs(digits);
            ok = mag < tolerance;
        }
        if (mag > report.max_residual) report.max_residual = mag;
        report.pass = report.pass && ok;
        report.checks.push_back({name, ok, mag});
    };

    add_check("K K^-1 = 1", rep.Kmat * rep.Kinv - eye);
    add_check("K^-1 K = 1", rep.Kinv * rep.Kmat - eye);
    add_check("K a+ = q^2 a+ K", rep.Kmat * rep.A_plus - q2 * (rep.A_plus * rep.Kmat));
    add_check("K a- = q^-2 a- K", rep.Kmat * rep.A_minus - qm2 * (rep.A_minus * rep.Kmat));
    add_check("{a+,a-} = (K - K^-1)/(q - q^-1)",
              rep.A_plus * rep.A_minus + rep.A_minus * rep.A_plus -
                  denom_inv * (rep.Kmat - rep.Kinv));
    return report;
}

bool is_irreducible(const ModuleSpec& spec) {
    if (!spec.finite()) throw OutOfRangeError("irreducibility test requires a finite range");
    for (long n = spec.n_lo + 1; n <= *spec.n_hi; ++n)
        if (lowering_coefficient(spec.m, spec.k, spec.p, n).is_zero()) return false;
    return true;
}

}  // namespace pbq
