#pragma once

// Generator matrices of the self-dual codes cut out by Hilbert symbols on the
// S-units <-1, 2, p_1, ..., p_{n-2}> of Q, with every p_i = 3 mod 4.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hilbcode/boxed.hpp"
#include "hilbcode/gf2.hpp"
#include "hilbcode/local_symbols.hpp"

namespace hilbcode {

/// The odd primes of S = {inf, 2, p_1, ..., p_{n-2}}, sorted ascending.
class PlaceSet {
 public:
  /// S = {inf, 2}.
  PlaceSet() = default;

  const std::vector<std::int64_t>& primes() const { return primes_; }
  /// Block dimension n = number of odd primes + 2.
  std::size_t n() const { return primes_.size() + 2; }

  /// Places in column order: p_1, ..., p_{n-2}, 2, inf.
  std::vector<Place> places() const;
  /// S-unit generators in row order: p_1, ..., p_{n-2}, 2, -1.
  std::vector<std::int64_t> s_units() const;

  bool operator==(const PlaceSet&) const = default;
  auto operator<=>(const PlaceSet&) const = default;

 private:
  friend PlaceSet verify_place_set(std::span<const std::int64_t> candidates);
  std::vector<std::int64_t> primes_;
};

/// Validates and sorts candidate odd primes. Rejects composites, primes
/// 1 mod 4, duplicates and an explicit 2, naming the offending entry.
PlaceSet verify_place_set(std::span<const std::int64_t> candidates);

/// The n x 2n matrix whose row for S-unit u holds square_class_coords(u, v)
/// for every place v, in the orders of PlaceSet::s_units and ::places.
BitMatrix generator_matrix(const PlaceSet& s);

struct CodeMetadata {
  BitMatrix generator;
  BlockMatrix blocks;
  /// Present when the rank is within kEnumerationRankGuard.
  std::optional<WeightEnumerator> weight_enumerator;
  std::optional<std::size_t> min_distance;
};

CodeMetadata code_metadata(const PlaceSet& s);

}  // namespace hilbcode
