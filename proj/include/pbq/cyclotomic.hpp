#pragma once

#include <vector>

#include "pbq/approx.hpp"
#include "pbq/errors.hpp"
#include "pbq/rational.hpp"

namespace pbq {

// Element of the cyclotomic field Q(zeta_N), zeta_N = e^{2 pi i / N}, stored on
// the power basis 1, zeta, ..., zeta^{phi(N)-1} reduced modulo the N-th
// cyclotomic polynomial. The reduced vector is canonical: two elements are
// equal iff their orders can be aligned and the vectors coincide.
class CyclotomicNumber {
  public:
    // Zero in Q(zeta_order).
    explicit CyclotomicNumber(long order = 1);

    static CyclotomicNumber from_rational(const Rational& value, long order = 1);
    static CyclotomicNumber from_long(long value, long order = 1);
    // zeta_order^power.
    static CyclotomicNumber zeta(long order, long power = 1);
    static CyclotomicNumber zeta(long order, const Integer& power);

    long order() const { return order_; }
    // Reduced coefficients, size deg Phi_order; index e holds the coefficient
    // of zeta^e.
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;
    bool is_real() const;

    // Same element viewed in Q(zeta_new_order); requires order | new_order.
    CyclotomicNumber promoted(long new_order) const;

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
    CyclotomicNumber operator-() const;
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

    friend CyclotomicNumber conj(const CyclotomicNumber& a);
    friend CyclotomicNumber inverse(const CyclotomicNumber& a);

    ApproxComplex to_complex(unsigned digits) const;

  private:
    long order_;
    std::vector<Rational> coeffs_;

    void reduce_();
    static std::pair<CyclotomicNumber, CyclotomicNumber> aligned_(const CyclotomicNumber& a,
                                                                  const CyclotomicNumber& b);
};

long euler_phi(long n);
// Monic integer coefficients of Phi_n, ascending degree.
const std::vector<Integer>& cyclotomic_polynomial(long n);

}  // namespace pbq
