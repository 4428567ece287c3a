#include "pbq/qnum.hpp"

namespace pbq {

namespace {

long mod_2k(long m, long k) {
    long r = m % (2 * k);
    return r < 0 ? r + 2 * k : r;
}

}  // namespace

void require_q_not_pm1(long m, long k) {
    if (k < 1) throw UndefinedParameterError("k must be positive");
    if (mod_2k(m, k) == 0)
        throw UndefinedParameterError("q = +-1 (m = " + std::to_string(m) +
                                      ", k = " + std::to_string(k) + ")");
}

void require_q_not_degenerate(long m, long k) {
    require_q_not_pm1(m, k);
    if (mod_2k(m, k) == k)
        throw UndefinedParameterError("q = +-i (m = " + std::to_string(m) +
                                      ", k = " + std::to_string(k) + ")");
}

CyclotomicNumber q_power(long m, long k, const Rational& e) {
    if (k < 1) throw UndefinedParameterError("k must be positive");
    const Integer den = e.get_den();
    if (!den.fits_slong_p()) throw Error("exponent denominator too large");
    const long order = 4 * k * den.get_si();
    return CyclotomicNumber::zeta(order, Integer(m) * e.get_num());
}

CyclotomicNumber q_power(long m, long k, long e) { return q_power(m, k, Rational(e)); }

CyclotomicNumber q_bracket(long m, long k, const Rational& e) {
    require_q_not_pm1(m, k);
    CyclotomicNumber num = q_power(m, k, e) - q_power(m, k, -e);
    CyclotomicNumber den = q_power(m, k, 1) - q_power(m, k, -1);
    return num / den;
}

CyclotomicNumber q_bracket(long m, long k, long e) { return q_bracket(m, k, Rational(e)); }

CyclotomicNumber q_brace(long m, long k, const Rational& e) {
    require_q_not_degenerate(m, k);
    CyclotomicNumber num = q_power(m, k, e) + q_power(m, k, -e);
    CyclotomicNumber den = q_power(m, k, 1) + q_power(m, k, -1);
    return num / den;
}

CyclotomicNumber q_brace(long m, long k, long e) { return q_brace(m, k, Rational(e)); }

}  // namespace pbq
