#pragma once

#include "doubletwist/fraction.hpp"

namespace dtk {

// Parameters (m, n) of the double twist knot C(m, n): two boxes of m and n
// right-handed half twists.  Canonical form has m > 1, n even, n != 0, -2,
// except for the unknot (flag) and the torus knots C(1, n) (flag).
struct DoubleTwist {
    i64 m = 1;
    i64 n = -2;
    bool unknot = false;
    bool torus = false;

    bool operator==(const DoubleTwist&) const = default;
};

// Canonical representative of the knot C(m, n).  C(m, n) = C(n, m), mirrors
// C(-m, -n) are identified, and the clasp flype gives C(m, -2) = C(m-1, 2).
// Both-even pairs are ordered with the larger |.| first.  Throws
// std::invalid_argument when m, n are both odd (a 2-component link).
DoubleTwist canonicalize(i64 m, i64 n);
DoubleTwist canonicalize(const DoubleTwist& k);

// (m n + 1) / n, normalized
TwoBridgeFraction classifying_fraction(i64 m, i64 n);
TwoBridgeFraction classifying_fraction(const DoubleTwist& k);

// |m n + 1|
i64 determinant(const DoubleTwist& k);

// m + n for n > 0, m - n - 1 for n < 0 (canonical, nontrivial input)
i64 crossing_number(const DoubleTwist& k);

}  // namespace dtk
