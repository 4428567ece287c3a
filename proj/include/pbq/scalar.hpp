#pragma once

#include <variant>

#include "pbq/approx.hpp"
#include "pbq/cyclotomic.hpp"

namespace pbq {

// Tagged scalar: exact cyclotomic value or arbitrary-precision complex.
// Arithmetic never mixes the variants; crossing requires an explicit downgrade.
class Scalar {
  public:
    Scalar() : v_(CyclotomicNumber(1)) {}
    explicit Scalar(CyclotomicNumber x) : v_(std::move(x)) {}
    explicit Scalar(ApproxComplex x) : v_(std::move(x)) {}

    static Scalar exact_rational(const Rational& r, long order = 1) {
        return Scalar(CyclotomicNumber::from_rational(r, order));
    }
    static Scalar exact_long(long v, long order = 1) {
        return Scalar(CyclotomicNumber::from_long(v, order));
    }

    bool is_exact() const { return std::holds_alternative<CyclotomicNumber>(v_); }
    const CyclotomicNumber& exact() const;
    const ApproxComplex& approx() const;
    unsigned digits() const;

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;

    // Exact -> Approx at the given precision; identity on Approx values.
    static Scalar downgrade(const Scalar& x, unsigned digits);
    ApproxComplex to_complex(unsigned digits) const;

    // A zero with the same variant, order, and precision as this value.
    Scalar zero_like() const;
    Scalar one_like() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    friend Scalar conj(const Scalar& a);

    // Exact equality in the Exact variant; tolerance 1e-40 in Approx.
    bool equals(const Scalar& other) const;
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.equals(b); }

  private:
    std::variant<CyclotomicNumber, ApproxComplex> v_;
};

}  // namespace pbq
