#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "pbq/errors.hpp"
#include "pbq/rational.hpp"

namespace pbq {

// Arbitrary-precision real. Runtime precision; binary operations propagate the
// maximum operand precision, so leaves constructed at working precision keep
// whole computations there.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>>;

inline constexpr unsigned kDefaultDigits = 64;
inline constexpr unsigned kGuardDigits = 12;
inline constexpr unsigned kMinDigits = 16;

// Absolute zero-test tolerance for the Approx backend.
Real approx_zero_tolerance();

Real real_from_rational(const Rational& r, unsigned digits);
Real real_from_long(long v, unsigned digits);
Real pi_at(unsigned digits);
// Fixed-format decimal, deterministic for a given (value, digits).
std::string decimal_string(const Real& x, unsigned digits);

// Complex number with explicit decimal precision P. Arithmetic carries the
// precision of the least precise operand; values never silently change P.
struct ApproxComplex {
    Real re;
    Real im;
    unsigned digits = kDefaultDigits;
};

ApproxComplex approx_zero(unsigned digits);
ApproxComplex approx_from_rational(const Rational& r, unsigned digits);
ApproxComplex approx_from_parts(const Real& re, const Real& im, unsigned digits);
ApproxComplex approx_from_strings(const std::string& re, const std::string& im, unsigned digits);
// Re-rounds both parts to the new precision.
ApproxComplex approx_rounded(const ApproxComplex& z, unsigned digits);

ApproxComplex operator+(const ApproxComplex& a, const ApproxComplex& b);
ApproxComplex operator-(const ApproxComplex& a, const ApproxComplex& b);
ApproxComplex operator*(const ApproxComplex& a, const ApproxComplex& b);
ApproxComplex operator/(const ApproxComplex& a, const ApproxComplex& b);
ApproxComplex operator-(const ApproxComplex& a);
ApproxComplex conj(const ApproxComplex& a);
Real abs(const ApproxComplex& a);
bool is_zero(const ApproxComplex& a);

// e^{i pi r} at the given precision.
ApproxComplex approx_unit_phase(const Rational& r, unsigned digits);

}  // namespace pbq
