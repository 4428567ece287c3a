#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbq/algebra.hpp"
#include "pbq/matrix.hpp"

namespace pbq {

// Highest-weight parameter: an exact rational or an approximate complex value.
class Weight {
  public:
    Weight() : rational_(Rational(0)) {}
    static Weight from_rational(const Rational& r) {
        Weight w;
        w.rational_ = r;
        return w;
    }
    static Weight from_approx(const ApproxComplex& z) {
        Weight w;
        w.rational_.reset();
        w.approx_ = z;
        return w;
    }

    bool is_exact() const { return rational_.has_value(); }
    const Rational& rational() const;
    const ApproxComplex& approx() const;
    unsigned digits() const { return is_exact() ? kDefaultDigits : approx_->digits; }

    std::string to_string() const;
    friend bool operator==(const Weight& a, const Weight& b);

  private:
    std::optional<Rational> rational_;
    std::optional<ApproxComplex> approx_;
};

// Basis window of a highest-weight module: vectors |p;n>, n = n_lo .. n_hi.
// An absent n_hi means the full infinite module in lazy index-wise form.
struct ModuleSpec {
    long m = 1;
    long k = 2;
    Weight p;
    long n_lo = 0;
    std::optional<long> n_hi;

    bool finite() const { return n_hi.has_value(); }
    long dimension() const;  // requires finite()
};

enum class BasisKind { verma, orthonormal };

// Concrete matrices of the generators on a finite module.
struct RepMatrices {
    ModuleSpec spec;
    BasisKind basis_kind = BasisKind::verma;
    std::vector<long> basis_labels;
    Matrix A_plus, A_minus, Kmat, Kinv;
};

struct SingularVectorEntry {
    long n;
    // Vanishing factors of the lowering coefficient, from
    // [n]·{n+p-1} (n even) or [n+p-1]·{n} (n odd).
    std::vector<std::string> vanished_factors;
};

struct SingularVectorReport {
    std::vector<SingularVectorEntry> singular;
    long n_max = 0;
    // True when zeros were declared by numeric tolerance rather than exactly.
    bool tolerance_based = false;
};

struct ActionResult {
    Scalar coefficient;
    std::optional<long> target;  // absent = annihilated
};

struct RelationCheck {
    std::string name;
    bool pass;
    Real residual;
};

struct RelationReport {
    bool pass = true;
    bool exact_mode = true;
    Real max_residual;
    std::vector<RelationCheck> checks;
};

// Action of one generator on the basis vector |p;n>:
//   K    |p;n> = q^{2n+p} |p;n>
//   a^+  |p;n> = |p;n+1>                      (0 at n = n_hi)
//   a^-  |p;n> = [n]{n+p-1} |p;n-1>   n even  (0 at n = n_lo)
//              = [n+p-1]{n} |p;n-1>   n odd
// Requires q outside {+-1, +-i}.
ActionResult verma_action(const ModuleSpec& spec, Generator g, long n);

// The lowering coefficient of a^- at index n in the full module F(p).
Scalar lowering_coefficient(long m, long k, const Weight& p, long n);

// Scan of a^- coefficients for n = 0..n_max; exact for rational p (zeros of
// sin/cos at rational multiples of pi), tolerance-based for approximate p.
SingularVectorReport singular_vectors(long m, long k, const Weight& p, long n_max);

// Same scan with q = e^{i theta} at an arbitrary numeric angle (radians).
SingularVectorReport singular_vectors(const Real& theta, const Real& p, long n_max,
                                      unsigned digits);

// Generator matrices in the Verma basis, with a^+|p;n_hi> = 0.
RepMatrices module_matrices(const ModuleSpec& spec);

// Truncation at a singular index: keeps n_lo .. cut-1. The cut must sit at a
// vanishing lowering coefficient so the kept span is a quotient of modules.
ModuleSpec quotient_module(const ModuleSpec& spec, long cut);

// Substitutes the generator matrices into a normal-ordered element.
Matrix evaluate_element(const AlgebraElement& e, const RepMatrices& rep);

// Checks the three defining relations on concrete matrices: exactly for exact
// entries, to the given tolerance otherwise.
RelationReport verify_relations(const RepMatrices& rep);
RelationReport verify_relations(const RepMatrices& rep, const Real& tolerance);

// True iff no interior index n_lo < n <= n_hi carries a singular vector.
bool is_irreducible(const ModuleSpec& spec);

}  // namespace pbq
