#pragma once

#include <gmpxx.h>

#include <string>

#include "pbq/errors.hpp"

namespace pbq {

// Arbitrary-precision rational, always stored canonicalized (reduced, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "a", "-a", or "a/b" in base 10.
inline Rational rational_from_string(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0 || text.empty())
        throw Error("invalid rational literal '" + text + "'");
    if (r.get_den() == 0) throw DivisionByZeroError("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw Error("rational " + to_string(r) + " is not a machine integer");
    return r.get_num().get_si();
}

// floor(r), exact.
inline Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

}  // namespace pbq
