#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "pbq/qnum.hpp"
#include "pbq/scalar.hpp"

namespace pbq {

// Generators of the deformed para-Bose superalgebra: odd pair a^+, a^- and the
// even invertible Cartan element K. Defining relations:
//   K K^{-1} = K^{-1} K = 1,
//   K a^{+-} = q^{+-2} a^{+-} K,
//   a^+ a^- + a^- a^+ = (K - K^{-1}) / (q - q^{-1}).
enum class Generator { Aplus, Aminus, K, Kinv };

enum class Grade { even, odd, mixed };

// Binds the deformation parameter q = zeta_{4k}^m = e^{i pi m/(2k)}. Requires
// q != +-1 so the anticommutator right-hand side is defined.
struct QContext {
    long m;
    long k;

    QContext(long m_, long k_);

    Scalar q_scalar(long e) const;
    Scalar q_scalar(const Rational& e) const;
    // q - q^{-1}, the anticommutator denominator.
    Scalar q_minus_qinv() const;

    friend bool operator==(const QContext& a, const QContext& b) {
        return a.m == b.m && a.k == b.k;
    }
};

// Exponent triple of the normal form (a^+)^i (a^-)^j K^s.
struct MonomialKey {
    long i = 0;  // a^+ exponent, >= 0
    long j = 0;  // a^- exponent, >= 0
    long s = 0;  // K exponent, any integer
    friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

// One summand of an unreduced word-level expression.
struct RawTerm {
    Scalar coeff;
    std::vector<Generator> word;
};

// Finite linear combination of normal-form monomials; zero coefficients are
// never stored. All arithmetic keeps the element normal-ordered.
class AlgebraElement {
  public:
    explicit AlgebraElement(const QContext& ctx) : ctx_(ctx) {}

    static AlgebraElement zero(const QContext& ctx) { return AlgebraElement(ctx); }
    static AlgebraElement one(const QContext& ctx);
    static AlgebraElement from_scalar(const QContext& ctx, const Scalar& c);
    static AlgebraElement generator(const QContext& ctx, Generator g);
    static AlgebraElement monomial(const QContext& ctx, const MonomialKey& key, const Scalar& c);

    const QContext& context() const { return ctx_; }
    const std::map<MonomialKey, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // True when the element is c * K^0, i.e. a plain scalar.
    bool is_scalar(Scalar* value = nullptr) const;

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
    AlgebraElement operator-() const;
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

    // e >= 0 for general elements; negative exponents only for invertible
    // single-term elements c * K^s.
    friend AlgebraElement pow(const AlgebraElement& a, long e);

    void add_term(const MonomialKey& key, const Scalar& c);

  private:
    QContext ctx_;
    std::map<MonomialKey, Scalar> terms_;
};

// Rewrites an arbitrary word-level expression into normal order by the
// defining relations. Terminates on every input; the result is independent of
// the rewrite order.
AlgebraElement normal_order(const QContext& ctx, const std::vector<RawTerm>& raw);

// The antilinear antiinvolution: omega(a^{+-}) = a^{-+}, omega(K^{+-1}) = K^{-+1},
// coefficients conjugated, products reversed. An involution.
AlgebraElement omega(const AlgebraElement& e);

// Z_2 grading: a monomial is even iff i + j is even.
Grade grade(const AlgebraElement& e);

// The central element
//   C_2 = (q^2 K^2 + q^{-2} K^{-2}
//          + (q^2-q^{-2})(q-q^{-1})(q^2 K + q^{-2} K^{-1}) a^- a^+
//          - (q^2-q^{-2})^2 (a^-)^2 (a^+)^2) / 2  +  2,
// normalized so that its eigenvalue on the weight-p vacuum module is
// (q^{2p-2} + q^{-2p+2})/2 + 2, which is 3 at p = 1.
AlgebraElement casimir_element(long m, long k);

// Canonical text form; parseable back for exact coefficients.
std::string pretty_print(const AlgebraElement& e);

}  // namespace pbq
