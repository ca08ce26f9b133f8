#include "hilbcode/number_theory.hpp"

#include <array>
#include <cstdlib>
#include <string>

#include "hilbcode/error.hpp"

namespace hilbcode {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  // First twelve primes as witnesses: complete below 3.3e24.
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                               17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (auto p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int jacobi(std::int64_t a, std::int64_t n) {
  if (n <= 0 || (n & 1) == 0) throw InvalidInput("jacobi: modulus must be odd and positive");
  std::int64_t m = a % n;
  if (m < 0) m += n;
  std::uint64_t x = static_cast<std::uint64_t>(m);
  std::uint64_t y = static_cast<std::uint64_t>(n);
  int sign = 1;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      const auto r = y & 7;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(x, y);
    if ((x & 3) == 3 && (y & 3) == 3) sign = -sign;
    x %= y;
  }
  return y == 1 ? sign : 0;
}

Valuation split_valuation(std::int64_t r, std::int64_t p) {
  if (r == 0) throw InvalidInput("valuation of zero is undefined");
  Valuation v{0, r};
  while (v.unit % p == 0) {
    v.unit /= p;
    ++v.exponent;
  }
  return v;
}

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n, std::int64_t trial_limit) {
  if (n == 0) throw InvalidInput("cannot factor zero");
  if (n == INT64_MIN) throw InvalidInput("integer exceeds 63-bit magnitude");
  std::uint64_t rest = static_cast<std::uint64_t>(std::llabs(n));
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::uint64_t d = 2; d < static_cast<std::uint64_t>(trial_limit) && d * d <= rest;
       d += (d == 2 ? 1 : 2)) {
    if (rest % d != 0) continue;
    int e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    out.emplace_back(static_cast<std::int64_t>(d), e);
  }
  if (rest > 1) {
    if (!is_prime(rest)) {
      throw InvalidInput("unfactored cofactor " + std::to_string(rest) +
                         " remains after trial division below " + std::to_string(trial_limit));
    }
    out.emplace_back(static_cast<std::int64_t>(rest), 1);
  }
  return out;
}

}  // namespace hilbcode
