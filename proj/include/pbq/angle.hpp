#pragma once

#include "pbq/rational.hpp"

namespace pbq {

// The angle pi * r with exact rational r. Sign queries depend only on r mod 2.
struct RationalAngle {
    Rational r;
};

enum class TrigKind { sin, cos };

// Exact sign of sin(pi r) or cos(pi r) in {-1, 0, +1}, decided by reducing
// r into [0, 2) and comparing against 0, 1/2, 1, 3/2. No floating point.
int trig_sign(const RationalAngle& angle, TrigKind kind);

inline bool trig_is_zero(const RationalAngle& angle, TrigKind kind) {
    return trig_sign(angle, kind) == 0;
}

}  // namespace pbq
