#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hilbcode {

/// Largest magnitude accepted for integer inputs (63-bit).
inline constexpr std::int64_t kMaxMagnitude = INT64_MAX;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Jacobi symbol (a/n) for odd positive n. No primality check.
int jacobi(std::int64_t a, std::int64_t n);

/// Splits r = p^valuation * unit with p not dividing unit. r must be nonzero.
struct Valuation {
  int exponent = 0;
  std::int64_t unit = 0;
};
Valuation split_valuation(std::int64_t r, std::int64_t p);

/// Prime factorization of |n| by trial division below `trial_limit`. A
/// leftover cofactor is accepted only when it is provably prime; otherwise
/// InvalidInput is thrown.
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n,
                                                 std::int64_t trial_limit = 1'000'000);

}  // namespace hilbcode
