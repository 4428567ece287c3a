#pragma once

#include "pbq/cyclotomic.hpp"
#include "pbq/rational.hpp"

namespace pbq {

// The deformation parameter is q = zeta_{4k}^m = e^{i pi m / (2k)}. All values
// live in Q(zeta_{4k}), extended to Q(zeta_{4k d}) for exponents with
// denominator d.

// Throws UndefinedParameterError when q would be +-1 (m = 0 mod 2k).
void require_q_not_pm1(long m, long k);
// Throws when q would be +-i (m = k mod 2k) or +-1.
void require_q_not_degenerate(long m, long k);

// q^e, exact; lives in Q(zeta_{4k * den(e)}).
CyclotomicNumber q_power(long m, long k, const Rational& e);
CyclotomicNumber q_power(long m, long k, long e);

// [e] = (q^e - q^{-e}) / (q - q^{-1}); requires q != +-1. Real.
CyclotomicNumber q_bracket(long m, long k, const Rational& e);
CyclotomicNumber q_bracket(long m, long k, long e);

// {e} = (q^e + q^{-e}) / (q + q^{-1}); requires q != +-i (and q != +-1). Real.
CyclotomicNumber q_brace(long m, long k, const Rational& e);
CyclotomicNumber q_brace(long m, long k, long e);

}  // namespace pbq
