#include "doubletwist/numeric.hpp"

#include <cmath>
#include <numeric>

namespace dtk {

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw range_error("integer addition overflow");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw range_error("integer multiplication overflow");
    return r;
}

i64 checked_neg(i64 a) {
    if (a == INT64_MIN) throw range_error("integer negation overflow");
    return -a;
}

i64 isqrt(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative value");
    if (n == 0) return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    return r * r == n;
}

i64 positive_mod(i64 a, i64 m) {
    if (m < 1) throw std::invalid_argument("positive_mod: modulus must be >= 1");
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

std::optional<i64> mod_inverse(i64 a, i64 m) {
    if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
    if (m == 1) return 0;
    i64 r0 = m, r1 = positive_mod(a, m);
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = r0 - q * r1;
        i64 t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) return std::nullopt;
    return positive_mod(t0, m);
}

std::vector<bool> squares_mod(i64 m) {
    std::vector<bool> set(static_cast<size_t>(m), false);
    for (i64 x = 0; x <= m / 2; ++x) set[static_cast<size_t>((x * x) % m)] = true;
    return set;
}

bool is_quadratic_residue(i64 a, i64 m) {
    if (m == 1) return true;
    i64 t = positive_mod(a, m);
    for (i64 x = 0; x <= m / 2; ++x)
        if ((x * x) % m == t) return true;
    return false;
}

bool is_sum_of_two_squares(i64 n) {
    if (n < 0) return false;
    if (n == 0) return true;
    // no prime p = 3 (mod 4) to an odd power
    i64 rest = n;
    for (i64 p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        if (p % 4 == 3 && e % 2 == 1) return false;
    }
    if (rest > 1 && rest % 4 == 3) return false;
    return true;
}

std::optional<std::pair<i64, i64>> sum_of_two_squares(i64 n) {
    if (n < 0) return std::nullopt;
    if (!is_sum_of_two_squares(n)) return std::nullopt;
    for (i64 z = 0; 2 * z * z <= n; ++z) {
        i64 rest = n - z * z;
        i64 y = isqrt(rest);
        if (y * y == rest) return std::make_pair(y, z);
    }
    return std::nullopt;  // unreachable: the predicate guarantees a witness
}

std::vector<std::array<i64, 3>> sum_of_three_squares(i64 n) {
    std::vector<std::array<i64, 3>> reps;
    if (n < 0) return reps;
    for (i64 a = isqrt(n); a >= 0 && 3 * a * a >= n; --a) {
        i64 rest = n - a * a;
        for (i64 b = std::min(a, isqrt(rest)); b >= 0 && 2 * b * b >= rest; --b) {
            i64 c2 = rest - b * b;
            i64 c = isqrt(c2);
            if (c * c == c2 && c <= b) reps.push_back({a, b, c});
        }
    }
    return reps;
}

}  // namespace dtk
