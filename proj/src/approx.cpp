#include "pbq/approx.hpp"

#include <mpfr.h>

#include <algorithm>

namespace pbq {

namespace {

unsigned working(unsigned digits) { return digits + kGuardDigits; }

}  // namespace

Real approx_zero_tolerance() {
    static const Real tol = [] {
        Real t(0, 64);
        t = Real("1e-40", 64);
        return t;
    }();
    return tol;
}

Real real_from_rational(const Rational& r, unsigned digits) {
    Real x(0, working(digits));
    mpfr_set_q(x.backend().data(), r.get_mpq_t(), MPFR_RNDN);
    return x;
}

Real real_from_long(long v, unsigned digits) {
    Real x(0, working(digits));
    mpfr_set_si(x.backend().data(), v, MPFR_RNDN);
    return x;
}

Real pi_at(unsigned digits) {
    Real x(0, working(digits));
    mpfr_const_pi(x.backend().data(), MPFR_RNDN);
    return x;
}

std::string decimal_string(const Real& x, unsigned digits) {
    return x.str(digits, std::ios_base::scientific);
}

ApproxComplex approx_zero(unsigned digits) {
    return {real_from_long(0, digits), real_from_long(0, digits), digits};
}

ApproxComplex approx_from_rational(const Rational& r, unsigned digits) {
    return {real_from_rational(r, digits), real_from_long(0, digits), digits};
}

ApproxComplex approx_from_parts(const Real& re, const Real& im, unsigned digits) {
    return {re, im, digits};
}

ApproxComplex approx_from_strings(const std::string& re, const std::string& im, unsigned digits) {
    Real r(0, working(digits)), i(0, working(digits));
    r.assign(re);
    i.assign(im);
    return {r, i, digits};
}

ApproxComplex approx_rounded(const ApproxComplex& z, unsigned digits) {
    Real re(0, working(digits)), im(0, working(digits));
    mpfr_set(re.backend().data(), z.re.backend().data(), MPFR_RNDN);
    mpfr_set(im.backend().data(), z.im.backend().data(), MPFR_RNDN);
    return {re, im, digits};
}

ApproxComplex operator+(const ApproxComplex& a, const ApproxComplex& b) {
    return {a.re + b.re, a.im + b.im, std::min(a.digits, b.digits)};
}

ApproxComplex operator-(const ApproxComplex& a, const ApproxComplex& b) {
    return {a.re - b.re, a.im - b.im, std::min(a.digits, b.digits)};
}

ApproxComplex operator*(const ApproxComplex& a, const ApproxComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, std::min(a.digits, b.digits)};
}

ApproxComplex operator/(const ApproxComplex& a, const ApproxComplex& b) {
    if (is_zero(b)) throw DivisionByZeroError("division by (approximately) zero");
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d,
            std::min(a.digits, b.digits)};
}

ApproxComplex operator-(const ApproxComplex& a) { return {-a.re, -a.im, a.digits}; }

ApproxComplex conj(const ApproxComplex& a) { return {a.re, -a.im, a.digits}; }

Real abs(const ApproxComplex& a) { return sqrt(a.re * a.re + a.im * a.im); }

bool is_zero(const ApproxComplex& a) { return abs(a) < approx_zero_tolerance(); }

ApproxComplex approx_unit_phase(const Rational& r, unsigned digits) {
    Real angle = real_from_rational(r, digits) * pi_at(digits);
    return {cos(angle), sin(angle), digits};
}

}  // namespace pbq
