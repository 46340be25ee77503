#pragma once

#include <vector>

#include "doubletwist/numeric.hpp"

namespace dtk {

// Reduced classifying fraction p/q of a 2-bridge knot or link, with mirror
// images identified.  Normal form: p >= 0, and q reduced into [0, p).
//   p odd       knot (p == 1 is the unknot, stored as 1/0)
//   p even > 0  2-component link
//   p == 0      2-component unlink (stored as 0/1)
struct TwoBridgeFraction {
    i64 p = 1;
    i64 q = 0;

    bool operator==(const TwoBridgeFraction&) const = default;
    bool is_knot() const { return p % 2 == 1; }
    bool is_unknot() const { return p == 1; }
    bool is_unlink() const { return p == 0; }
};

// Normalizes num/den: mirrors are identified by making p >= 0, then q is
// reduced mod p.  num/0 is the unknot, 0/den the unlink.
TwoBridgeFraction make_fraction(i128 num, i128 den);

enum class Convention { additive, subtractive };

struct ContinuedFraction {
    std::vector<i64> terms;
    Convention convention = Convention::additive;
};

// Evaluates [a1, a2, ..., ak] = a1 + 1/(a2 + 1/(... + 1/ak)).  Evaluation is
// projective, so intermediate zero tails are fine (1/0 = inf, a + inf = inf,
// 1/inf = 0).
TwoBridgeFraction cf_value(const std::vector<i64>& terms);
TwoBridgeFraction cf_value(const ContinuedFraction& cf);

// Unique expansion p/q = b1 - 1/(b2 - 1/(... - 1/bk)) with all bi >= 2.
// Requires p > q >= 1.
ContinuedFraction subtractive_cf(const TwoBridgeFraction& f);

// The q-values {q, q', p-q, p-q'} with q' the inverse of q mod p; these are
// exactly the fractions describing the same knot or its mirror.  Sorted,
// deduplicated.  Requires p >= 2.
std::vector<i64> orbit_qs(const TwoBridgeFraction& f);
std::vector<TwoBridgeFraction> fraction_orbit(const TwoBridgeFraction& f);

// Smallest orbit member; used as dedup key for tables.
TwoBridgeFraction orbit_representative(const TwoBridgeFraction& f);

// p1 == p2 and q2 = +-q1 or q1 q2 = +-1 (mod p)
bool knots_equivalent(const TwoBridgeFraction& a, const TwoBridgeFraction& b);

}  // namespace dtk
