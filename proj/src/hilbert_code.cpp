#include "hilbcode/hilbert_code.hpp"

#include <algorithm>
#include <string>

#include "hilbcode/error.hpp"
#include "hilbcode/number_theory.hpp"

namespace hilbcode {

std::vector<Place> PlaceSet::places() const {
  std::vector<Place> out;
  out.reserve(n());
  for (auto p : primes_) out.push_back(Place::odd(p));
  out.push_back(Place::two());
  out.push_back(Place::infinity());
  return out;
}

std::vector<std::int64_t> PlaceSet::s_units() const {
  std::vector<std::int64_t> out(primes_);
  out.push_back(2);
  out.push_back(-1);
  return out;
}

PlaceSet verify_place_set(std::span<const std::int64_t> candidates) {
  PlaceSet s;
  for (auto p : candidates) {
    const std::string name = std::to_string(p);
    if (p == 2) throw InvalidInput("2 listed explicitly (the place 2 is always included)");
    if (p < 2) throw InvalidInput(name + " is not a prime");
    if (!is_prime(static_cast<std::uint64_t>(p))) throw InvalidInput(name + " composite");
    if (p % 4 == 1) throw InvalidInput(name + " ≡ 1 mod 4");
    if (std::find(s.primes_.begin(), s.primes_.end(), p) != s.primes_.end()) {
      throw InvalidInput(name + " duplicate");
    }
    s.primes_.push_back(p);
  }
  std::sort(s.primes_.begin(), s.primes_.end());
  return s;
}

BitMatrix generator_matrix(const PlaceSet& s) {
  const auto units = s.s_units();
  const auto places = s.places();
  const std::size_t n = s.n();
  BitMatrix m(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t col = 0;
    for (const auto& v : places) {
      const auto coords = square_class_coords(units[r], v);
      for (std::size_t i = 0; i < coords.dimension(); ++i) m.set(r, col++, coords.coord(i));
    }
  }
  return m;
}

CodeMetadata code_metadata(const PlaceSet& s) {
  CodeMetadata meta{generator_matrix(s), {}, std::nullopt, std::nullopt};
  meta.blocks = blocks_of(meta.generator);
  if (s.n() <= kEnumerationRankGuard) {
    meta.weight_enumerator = weight_enumerator(meta.generator);
    const auto& counts = meta.weight_enumerator->counts;
    const auto first = std::find_if(counts.begin() + 1, counts.end(), [](auto c) { return c != 0; });
    meta.min_distance = static_cast<std::size_t>(first - counts.begin());
  }
  return meta;
}

}  // namespace hilbcode
