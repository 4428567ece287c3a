#include "pbq/angle.hpp"

namespace pbq {

int trig_sign(const RationalAngle& angle, TrigKind kind) {
    // cos(pi r) = sin(pi (r + 1/2)).
    Rational r = angle.r;
    if (kind == TrigKind::cos) r += make_rational(1, 2);
    // Reduce into [0, 2).
    Rational t = r - 2 * Rational(floor_of(r / 2));
    if (t == 0 || t == 1) return 0;
    return t < 1 ? 1 : -1;
}

}  // namespace pbq
