#include "hilbcode/realize.hpp"

#include <algorithm>
#include <string>

#include "hilbcode/error.hpp"
#include "hilbcode/number_theory.hpp"

namespace hilbcode {

PrimeConstraint residue_constraints(const BlockMatrix& b, std::size_t i) {
  if (!is_boxed(b)) throw InvalidInput("residue constraints need a boxed matrix");
  const std::size_t n = b.n();
  if (i + 2 >= n) {
    throw InvalidInput("prime index " + std::to_string(i) + " out of range for n = " +
                       std::to_string(n));
  }
  PrimeConstraint c;
  c.index = i;
  c.mod8_class = b.at(i, n - 2) == kBlock00 ? 3 : 7;
  for (std::size_t j = 0; j < i; ++j) c.conditions.push_back({j, b.at(i, j) == kBlock00 ? 1 : -1});
  return c;
}

std::optional<std::uint64_t> next_prime_satisfying(const PrimeConstraint& c,
                                                   std::span<const std::int64_t> chosen,
                                                   std::uint64_t start, std::uint64_t bound) {
  if (c.mod8_class != 3 && c.mod8_class != 7) throw InvalidInput("mod 8 class must be 3 or 7");
  for (const auto& cond : c.conditions) {
    if (cond.earlier >= chosen.size()) throw InvalidInput("condition refers to an unchosen prime");
  }
  const auto cls = static_cast<std::uint64_t>(c.mod8_class);
  std::uint64_t q = start <= cls ? cls : start + ((cls + 8 - start % 8) % 8);
  for (; q <= bound && q >= start; q += 8) {
    const auto signed_q = static_cast<std::int64_t>(q);
    if (std::find(chosen.begin(), chosen.end(), signed_q) != chosen.end()) continue;
    const bool residues_ok = std::all_of(c.conditions.begin(), c.conditions.end(), [&](const auto& cond) {
      return jacobi(signed_q, chosen[cond.earlier]) == cond.sign;
    });
    if (residues_ok && is_prime(q)) return q;
    if (q > UINT64_MAX - 8) break;
  }
  return std::nullopt;
}

namespace {

class Backtracker {
 public:
  Backtracker(const BlockMatrix& b, std::size_t count, std::uint64_t bound)
      : count_(count), bound_(bound) {
    for (std::size_t i = 0; i + 2 < b.n(); ++i) constraints_.push_back(residue_constraints(b, i));
  }

  void run(RealizationResult& out) {
    chosen_.clear();
    descend(out);
  }

 private:
  // True once `count_` place sets are collected.
  bool descend(RealizationResult& out) {
    const std::size_t depth = chosen_.size();
    if (depth == constraints_.size()) {
      out.place_sets.push_back(verify_place_set(chosen_));
      return out.place_sets.size() >= count_;
    }
    out.deepest_index = std::max(out.deepest_index, depth);
    std::uint64_t start = chosen_.empty() ? 3 : static_cast<std::uint64_t>(chosen_.back()) + 1;
    while (start <= bound_) {
      const auto q = next_prime_satisfying(constraints_[depth], chosen_, start, bound_);
      if (!q) return false;
      chosen_.push_back(static_cast<std::int64_t>(*q));
      const bool done = descend(out);
      chosen_.pop_back();
      if (done) return true;
      start = *q + 1;
    }
    return false;
  }

  std::vector<PrimeConstraint> constraints_;
  std::vector<std::int64_t> chosen_;
  std::size_t count_;
  std::uint64_t bound_;
};

}  // namespace

RealizationResult realize(const BlockMatrix& b, std::size_t count, std::uint64_t bound) {
  if (!is_boxed(b)) throw InvalidInput("realize needs a boxed matrix");
  if (count == 0) throw InvalidInput("realization count must be at least 1");
  if (bound > static_cast<std::uint64_t>(INT64_MAX)) throw InvalidInput("prime bound exceeds 63 bits");
  RealizationResult out;
  Backtracker(b, count, bound).run(out);
  out.exhausted = out.place_sets.size() < count;
  return out;
}

bool verify_realization(const BlockMatrix& b, const PlaceSet& s) {
  if (b.n() != s.n()) return false;
  return blocks_of(generator_matrix(s)) == b;
}

}  // namespace hilbcode
