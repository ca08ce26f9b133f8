#pragma once

// Realization of boxed matrices as Hilbert codes: each boxed matrix fixes the
// class of p_i mod 8 and the quadratic character of p_i modulo every earlier
// p_j; primes meeting those constraints are found by ascending search.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hilbcode/boxed.hpp"
#include "hilbcode/hilbert_code.hpp"

namespace hilbcode {

/// legendre(p_i, p_{earlier}) must equal sign.
struct LegendreCondition {
  std::size_t earlier = 0;
  int sign = 1;

  bool operator==(const LegendreCondition&) const = default;
};

struct PrimeConstraint {
  std::size_t index = 0;  // 0-based prime index i
  int mod8_class = 3;     // 3 or 7
  std::vector<LegendreCondition> conditions;

  bool operator==(const PrimeConstraint&) const = default;
};

inline constexpr std::uint64_t kDefaultPrimeBound = std::uint64_t{1} << 32;

/// Constraint on p_i (0-based, i < n - 2) read from row i of a boxed matrix:
/// b_{i,n-2} gives the class mod 8 (00 -> 3, 11 -> 7), and b_ij for j < i
/// gives legendre(p_i, p_j) (00 -> +1, 11 -> -1).
PrimeConstraint residue_constraints(const BlockMatrix& b, std::size_t i);

/// Smallest prime q in [start, bound] meeting `c`, where c's conditions refer
/// to entries of `chosen`, and q is not already in `chosen`.
std::optional<std::uint64_t> next_prime_satisfying(const PrimeConstraint& c,
                                                   std::span<const std::int64_t> chosen,
                                                   std::uint64_t start, std::uint64_t bound);

struct RealizationResult {
  std::vector<PlaceSet> place_sets;
  /// True when the bound ran out before `count` place sets were found.
  bool exhausted = false;
  /// Deepest prime index that received a candidate during the search.
  std::size_t deepest_index = 0;
};

/// The first `count` place sets, in lexicographic order of (p_1, ..., p_{n-2}),
/// whose Hilbert code has block view exactly b.
RealizationResult realize(const BlockMatrix& b, std::size_t count,
                          std::uint64_t bound = kDefaultPrimeBound);

bool verify_realization(const BlockMatrix& b, const PlaceSet& s);

}  // namespace hilbcode
