#pragma once

// Legendre and Hilbert symbols at the places of Q, and coordinates of square
// classes relative to Euclidean bases of Q_v* / (Q_v*)^2.

#include <cstdint>
#include <string>
#include <vector>

#include "hilbcode/gf2.hpp"

namespace hilbcode {

/// A place of Q: the real place, the 2-adic place, or an odd prime.
class Place {
 public:
  enum class Kind { infinity, two, odd };

  static Place infinity() { return Place(Kind::infinity, 0); }
  static Place two() { return Place(Kind::two, 2); }
  /// Throws InvalidInput unless p is an odd prime.
  static Place odd(std::int64_t p);

  Kind kind() const { return kind_; }
  /// The prime for finite places, 0 for infinity.
  std::int64_t prime() const { return prime_; }
  /// Dimension of the square-class group: 1, 3 or 2.
  std::size_t dimension() const;
  std::string to_string() const;

  bool operator==(const Place&) const = default;
  /// Orders infinity, then two, then odd primes ascending.
  auto operator<=>(const Place&) const = default;

 private:
  Place(Kind kind, std::int64_t prime) : kind_(kind), prime_(prime) {}
  Kind kind_;
  std::int64_t prime_;
};

/// Coordinates of a square class in the fixed basis of its place:
///   infinity: {-1}; two: {-2, -10, -5}; odd p: {-p, p}.
struct SquareClassVector {
  Place place;
  std::uint8_t bits = 0;  // coordinate i stored in bit (dimension - 1 - i)

  std::size_t dimension() const { return place.dimension(); }
  bool coord(std::size_t i) const { return (bits >> (dimension() - 1 - i)) & 1u; }
  /// Euclidean pairing of coordinate vectors.
  bool dot(const SquareClassVector& other) const;
  SquareClassVector operator^(const SquareClassVector& other) const;
  std::string to_string() const;

  bool operator==(const SquareClassVector&) const = default;
};

/// Legendre symbol (a/p) in {-1, 0, 1}. Throws unless p is an odd prime.
int legendre(std::int64_t a, std::int64_t p);

/// Throws InvalidInput for r = 0 or |r| beyond 63 bits.
SquareClassVector square_class_coords(std::int64_t r, const Place& v);

/// Hilbert symbol (a, b)_v encoded additively: false for +1, true for -1.
bool hilbert_symbol(std::int64_t a, std::int64_t b, const Place& v);

/// Rational representatives of the Euclidean basis at v.
std::vector<std::int64_t> basis_representatives(const Place& v);

/// Gram matrix of the Hilbert pairing on basis_representatives(v).
/// Throws for odd p = 1 mod 4, where no Euclidean basis exists.
BitMatrix gram_matrix(const Place& v);

/// {infinity, two} plus every odd prime dividing ab, in Place order.
std::vector<Place> symbol_support(std::int64_t a, std::int64_t b);

}  // namespace hilbcode
