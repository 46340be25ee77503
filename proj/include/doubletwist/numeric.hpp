#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtk {

using i64 = std::int64_t;
using i128 = __int128;

// Exact integer arithmetic left the supported range (values must fit in 64
// bits; intermediates are carried in 128 bits).
struct range_error : std::runtime_error {
    explicit range_error(const std::string& what) : std::runtime_error(what) {}
};

// A bounded search ran out of its node budget before deciding.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 checked_neg(i64 a);

// floor(sqrt(n)) for n >= 0
i64 isqrt(i64 n);
bool is_perfect_square(i64 n);

// a reduced into [0, m), m >= 1
i64 positive_mod(i64 a, i64 m);

// multiplicative inverse of a mod m, if gcd(a, m) == 1
std::optional<i64> mod_inverse(i64 a, i64 m);

// bitmap of quadratic residues mod m (index r set iff r = x^2 mod m for some x)
std::vector<bool> squares_mod(i64 m);
bool is_quadratic_residue(i64 a, i64 m);

// n >= 0 expressible as y^2 + z^2; decomposition has y >= z >= 0
bool is_sum_of_two_squares(i64 n);
std::optional<std::pair<i64, i64>> sum_of_two_squares(i64 n);

// all (a, b, c) with a >= b >= c >= 0 and a^2 + b^2 + c^2 = n
std::vector<std::array<i64, 3>> sum_of_three_squares(i64 n);

}  // namespace dtk
