#include "pbq/scalar.hpp"

namespace pbq {

namespace {

[[noreturn]] void mix_error() {
    throw VariantMixError("exact and approximate scalars require an explicit downgrade");
}

}  // namespace

const CyclotomicNumber& Scalar::exact() const {
    if (!is_exact()) throw VariantMixError("scalar is not exact");
    return std::get<CyclotomicNumber>(v_);
}

const ApproxComplex& Scalar::approx() const {
    if (is_exact()) throw VariantMixError("scalar is not approximate");
    return std::get<ApproxComplex>(v_);
}

unsigned Scalar::digits() const { return is_exact() ? kDefaultDigits : approx().digits; }

bool Scalar::is_zero() const {
    return is_exact() ? exact().is_zero() : pbq::is_zero(approx());
}

bool Scalar::is_rational() const { return is_exact() && exact().is_rational(); }

Rational Scalar::rational_value() const { return exact().rational_value(); }

Scalar Scalar::downgrade(const Scalar& x, unsigned digits) {
    if (!x.is_exact()) return Scalar(approx_rounded(x.approx(), digits));
    return Scalar(x.exact().to_complex(digits));
}

ApproxComplex Scalar::to_complex(unsigned digits) const {
    if (digits < kMinDigits) throw Error("precision below the 16-digit minimum");
    return is_exact() ? exact().to_complex(digits) : approx();
}

Scalar Scalar::zero_like() const {
    if (is_exact()) return Scalar(CyclotomicNumber(exact().order()));
    return Scalar(approx_zero(approx().digits));
}

Scalar Scalar::one_like() const {
    if (is_exact()) return Scalar(CyclotomicNumber::from_long(1, exact().order()));
    return Scalar(approx_from_rational(Rational(1), approx().digits));
}

#define PBQ_SCALAR_BINOP(op)                                            \
    Scalar operator op(const Scalar& a, const Scalar& b) {              \
        if (a.is_exact() != b.is_exact()) mix_error();                  \
        if (a.is_exact()) return Scalar(a.exact() op b.exact());        \
        return Scalar(a.approx() op b.approx());                        \
    }

PBQ_SCALAR_BINOP(+)
PBQ_SCALAR_BINOP(-)
PBQ_SCALAR_BINOP(*)

#undef PBQ_SCALAR_BINOP

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.is_exact() != b.is_exact()) mix_error();
    if (a.is_exact()) {
        if (b.exact().is_zero()) throw DivisionByZeroError("scalar division by zero");
        return Scalar(a.exact() / b.exact());
    }
    return Scalar(a.approx() / b.approx());
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(-exact());
    return Scalar(-approx());
}

Scalar conj(const Scalar& a) {
    if (a.is_exact()) return Scalar(conj(a.exact()));
    return Scalar(conj(a.approx()));
}

bool Scalar::equals(const Scalar& other) const {
    if (is_exact() != other.is_exact()) mix_error();
    if (is_exact()) return exact() == other.exact();
    return pbq::is_zero(approx() - other.approx());
}

}  // namespace pbq
