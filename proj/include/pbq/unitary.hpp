#pragma once

#include <optional>
#include <vector>

#include "pbq/classify.hpp"
#include "pbq/fock.hpp"

namespace pbq {

// One rung of the orthonormalization ladder: the squared rescaling ratio
// |alpha(p;n)/alpha(p;n+1)|^2 as an exact real cyclotomic value, plus its sign
// certified by integer arithmetic on the trig arguments.
struct LadderEntry {
    long n = 0;
    CyclotomicNumber value;
    int sign = 0;  // -1, 0, +1
};

struct NormalizationLadder {
    AlgebraParams params;
    Weight p;
    long L = 0;
    std::vector<LadderEntry> entries;  // n = 0 .. L-1
};

struct UnitarityVerdict {
    UnitaryStatus status = UnitaryStatus::boundary;
    std::vector<int> witness_signs;       // one per rung
    std::optional<long> first_negative;   // set when not unitarizable
    std::optional<long> first_zero;       // set when any rung degenerates
};

struct CensusRow {
    Rational p;
    long L = 0;
    UnitaryStatus status = UnitaryStatus::unitarizable;

    friend bool operator==(const CensusRow& a, const CensusRow& b) {
        return a.p == b.p && a.L == b.L && a.status == b.status;
    }
};

// Checks of the conjugation contract (A_minus)^dagger = A_plus,
// K^dagger = K^{-1} on concrete matrices, plus a re-check of the defining
// relations in the same basis.
struct UnitarityReport {
    bool basis_ok = false;  // input was in the orthonormal basis
    bool adjoint_pair = false;
    bool k_unitary = false;
    Real max_deviation;
    RelationReport relations;
    bool pass = false;
};

// Squared rescaling ratios for |p;0> .. |p;L>:
//   even n: 2 sin(theta(n+p)) cos(theta(n+1)) / sin(2 theta)
//   odd n:  2 sin(theta(n+1)) cos(theta(n+p)) / sin(2 theta)
// with theta = pi m/(2k). Requires a real rational weight.
NormalizationLadder unitarity_ratios(const AlgebraParams& params, const Weight& p, long L);

// Sign-only evaluation of the ladder: strictly positive everywhere ->
// unitarizable; any negative -> not unitarizable; otherwise boundary
// (a degenerate norm, reported distinctly, never folded into yes/no).
UnitarityVerdict is_unitarizable(const AlgebraParams& params, const Weight& p, long L);

// Unitarizable and boundary modules over a weight grid. Integer weights are
// always evaluated at their classified top index; every grid weight is also
// evaluated at the generic top index (this realizes the continuous families
// including their endpoints). Only modules of dimension >= 2 are listed.
// An empty grid means the default: half-integer steps across the window.
std::vector<CensusRow> classify_unitarizable(const AlgebraParams& params,
                                             const std::vector<Rational>& p_grid = {});

// Generator matrices in the orthonormal basis: K stays diagonal with exact
// unimodular entries; a^- has the real entries sqrt(ratio(n)) evaluated at the
// given precision on the superdiagonal, and a^+ is exactly its transpose.
// Refused unless the module is strictly unitarizable.
RepMatrices orthonormal_matrices(const AlgebraParams& params, const Weight& p, long L,
                                 unsigned precision = kDefaultDigits);

// Entrywise adjoint checks to 10^{1-precision}, plus the relation suite.
UnitarityReport verify_unitarity(const RepMatrices& rep, unsigned precision = kDefaultDigits);

}  // namespace pbq
