#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbq/fock.hpp"

namespace pbq {

// The three families of deformation parameters q = e^{i pi m/(2k)}, split by
// the parities of the reduced fraction m/k.
enum class CaseTag { k_even_m_odd, k_odd_m_odd, k_odd_m_even };

std::string case_tag_name(CaseTag tag);

enum class UnitaryStatus { unitarizable, not_unitarizable, boundary };

std::string unitary_status_name(UnitaryStatus s);

struct AlgebraParams {
    long m = 1;
    long k = 2;
    CaseTag tag = CaseTag::k_even_m_odd;
    // True when m/k is already an irreducible admissible fraction. Raw
    // (non-reduced) parameters are permitted only on the unitarity path.
    bool admissible = true;
};

// Substitution of generators realizing the isomorphism onto canonical
// parameters: optionally swap a^+ <-> a^-, optionally send K -> -K.
struct GeneratorMap {
    bool swap_pm = false;
    bool negate_K = false;
    std::string describe() const;
};

struct CanonicalizationResult {
    AlgebraParams params;
    GeneratorMap map;
};

// A simple highest-weight module W(|p;0>, |p;L>) tagged with its invariants.
struct IrrepDescriptor {
    AlgebraParams params;
    Weight p;
    long L = 0;
    std::vector<Scalar> K_spectrum;
    Scalar casimir;
    std::optional<UnitaryStatus> unitarizable;

    long dimension() const { return L + 1; }
};

struct IntertwinerCertificate {
    ModuleSpec source;
    ModuleSpec target;
    long index_shift = 0;       // basis map n -> n + index_shift
    Rational weight_shift = 0;  // target weight minus source weight
    bool verified = false;
};

struct CentralReport {
    bool aplus_power_zero = false;
    bool aminus_power_zero = false;
    bool k_power_scalar = false;
    Scalar k_scalar;
    bool pass() const { return aplus_power_zero && aminus_power_zero && k_power_scalar; }
};

// k >= 2, 1 <= m <= k-1, gcd(m,k) = 1.
bool is_admissible(long m, long k);

// Validated admissible parameters; throws otherwise.
AlgebraParams algebra_params(long m, long k);
// Accepts any (m,k) with q outside {+-1,+-i}; the case tag comes from the
// reduced fraction. Used by the unitarity machinery, which is insensitive to
// common factors of m and k.
AlgebraParams algebra_params_raw(long m, long k);

// Reduces the fraction and applies the isomorphisms q -> -q (K -> -K) and
// q -> -q^{-1} (a^+ <-> a^-) to land in the admissible window 1 <= m <= k-1.
// Throws for q in {+-1, +-i}.
CanonicalizationResult canonicalize(long m_raw, long k_raw);

// Largest integer weight of the case's normalization window:
// 4k for odd m; 2k for m = 2 (mod 4); k for m = 0 (mod 4).
long integer_window_max(const AlgebraParams& params);

// Top index L of the simple vacuum module with integer weight p in the
// window, by the closed-form classification tables.
long closed_form_L(const AlgebraParams& params, long p);

// Top index for non-integer weights: 2k-1, except k-1 when both m,k are odd.
long generic_L(const AlgebraParams& params);

// Fold a rational weight into the half-open window (0, W]; weights are
// periodic mod W, and multiples of W (p = 0 included) land on the top edge.
Rational normalize_weight(const AlgebraParams& params, const Rational& p);

// All simple vacuum modules with integer weight in the window, plus one
// generic descriptor per non-integer sample. Sorted by (p, L).
std::vector<IrrepDescriptor> vacuum_irreps(const AlgebraParams& params,
                                           const std::vector<Rational>& nonint_samples = {});

// (q^{2p-2} + q^{-2p+2})/2 + 2; the scalar value of the Casimir element on the
// weight-p vacuum module.
Scalar casimir_eigenvalue(const AlgebraParams& params, const Weight& p);

// Tests the canonical shift map n -> n + (target.n_lo - source.n_lo) between
// two finite modules of one algebra by exact comparison of the K and a^-
// actions. Returns a verified certificate, or nothing if any coefficient
// differs. (Both bases are a^+-strings over the local highest-weight vector,
// so any intertwiner is this map up to one overall scalar.)
std::optional<IntertwinerCertificate> find_intertwiner(const ModuleSpec& source,
                                                       const ModuleSpec& target);

// (a^+)^{4k} = (a^-)^{4k} = 0 and K^{2k} scalar on the module of desc.
CentralReport central_checks(const IrrepDescriptor& desc);

}  // namespace pbq
