#include "doubletwist/fraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtk {

namespace {

const i128 kLimit = static_cast<i128>(1) << 62;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i128 mul128_checked(i128 a, i128 b) {
    if (a != 0 && abs128(b) > (static_cast<i128>(1) << 120) / abs128(a))
        throw range_error("continued fraction value out of range");
    return a * b;
}

}  // namespace

TwoBridgeFraction make_fraction(i128 num, i128 den) {
    if (num == 0 && den == 0) throw std::invalid_argument("fraction 0/0");
    if (den == 0) return {1, 0};
    if (num == 0) return {0, 1};
    i128 g = gcd128(num, den);
    num /= g;
    den /= g;
    if (num < 0) {  // mirror image: identify -p/q with p/-q, then p/q mod p
        num = -num;
        den = -den;
    }
    if (num > kLimit) throw range_error("fraction numerator out of range");
    i64 p = static_cast<i64>(num);
    i64 q = positive_mod(static_cast<i64>(den % num), p);
    return {p, q};
}

TwoBridgeFraction cf_value(const std::vector<i64>& terms) {
    if (terms.empty()) throw std::invalid_argument("empty continued fraction");
    return cf_value(ContinuedFraction{terms, Convention::additive});
}

TwoBridgeFraction cf_value(const ContinuedFraction& cf) {
    if (cf.terms.empty()) throw std::invalid_argument("empty continued fraction");
    // right to left: value (P : Q) becomes (a P + s Q : P), projectively
    i128 sign = cf.convention == Convention::additive ? 1 : -1;
    i128 num = cf.terms.back(), den = 1;
    for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) {
        i128 next = mul128_checked(static_cast<i128>(*it), num) + sign * den;
        den = num;
        num = next;
        if (abs128(num) > kLimit || abs128(den) > kLimit)
            throw range_error("continued fraction value out of range");
    }
    return make_fraction(num, den);
}

ContinuedFraction subtractive_cf(const TwoBridgeFraction& f) {
    if (f.p <= 1 || f.q < 1 || f.q >= f.p)
        throw std::invalid_argument("subtractive_cf requires p > q >= 1");
    ContinuedFraction out;
    out.convention = Convention::subtractive;
    i64 p = f.p, q = f.q;
    while (true) {
        i64 b = (p + q - 1) / q;  // ceil(p/q), >= 2 because p > q
        out.terms.push_back(b);
        i64 r = b * q - p;  // 0 <= r < q
        if (r == 0) break;
        p = q;
        q = r;
    }
    return out;
}

std::vector<i64> orbit_qs(const TwoBridgeFraction& f) {
    if (f.p < 2) throw std::invalid_argument("orbit requires p >= 2");
    auto inv = mod_inverse(f.q, f.p);
    if (!inv) throw std::invalid_argument("orbit requires gcd(p, q) = 1");
    std::vector<i64> qs = {f.q, *inv, f.p - f.q, f.p - *inv};
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

std::vector<TwoBridgeFraction> fraction_orbit(const TwoBridgeFraction& f) {
    std::vector<TwoBridgeFraction> out;
    for (i64 q : orbit_qs(f)) out.push_back({f.p, q});
    return out;
}

TwoBridgeFraction orbit_representative(const TwoBridgeFraction& f) {
    if (f.p < 2) return f;
    return {f.p, orbit_qs(f).front()};
}

bool knots_equivalent(const TwoBridgeFraction& a, const TwoBridgeFraction& b) {
    if (a.p != b.p) return false;
    if (a.p < 2) return true;
    i128 p = a.p;
    i128 diff = (static_cast<i128>(a.q) - b.q) % p;
    i128 sum = (static_cast<i128>(a.q) + b.q) % p;
    if (diff == 0 || sum == 0) return true;
    i128 prod = (static_cast<i128>(a.q) * b.q) % p;
    return prod == 1 || prod == p - 1;
}

}  // namespace dtk
