#include "hilbcode/local_symbols.hpp"

#include <algorithm>
#include <bit>

#include "hilbcode/error.hpp"
#include "hilbcode/number_theory.hpp"

namespace hilbcode {

namespace {

void require_nonzero(std::int64_t r, const char* what) {
  if (r == 0) throw InvalidInput(std::string(what) + " must be nonzero");
  if (r == INT64_MIN) throw InvalidInput(std::string(what) + " exceeds 63-bit magnitude");
}

// Residue of an odd integer mod 8, in {1, 3, 5, 7}.
int mod8(std::int64_t u) { return static_cast<int>(((u % 8) + 8) % 8); }

// (u - 1) / 2 mod 2 for odd u.
int epsilon(std::int64_t u) { return mod8(u) % 4 == 3 ? 1 : 0; }

// (u^2 - 1) / 8 mod 2 for odd u.
int omega(std::int64_t u) {
  const int r = mod8(u);
  return (r == 3 || r == 5) ? 1 : 0;
}

// Unit classes mod 8 in the basis {-2, -10, -5}: 1 -> 000, 3 -> 001, 5 -> 110, 7 -> 111.
std::uint8_t two_adic_unit_bits(std::int64_t u) {
  switch (mod8(u)) {
    case 1: return 0b000;
    case 3: return 0b001;
    case 5: return 0b110;
    default: return 0b111;
  }
}

constexpr std::uint8_t kTwoAdicClassOfTwo = 0b011;

}  // namespace

Place Place::odd(std::int64_t p) {
  if (p < 3 || (p & 1) == 0 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw InvalidInput(std::to_string(p) + " is not an odd prime");
  }
  return Place(Kind::odd, p);
}

std::size_t Place::dimension() const {
  switch (kind_) {
    case Kind::infinity: return 1;
    case Kind::two: return 3;
    case Kind::odd: return 2;
  }
  return 0;
}

std::string Place::to_string() const {
  switch (kind_) {
    case Kind::infinity: return "inf";
    case Kind::two: return "2";
    case Kind::odd: return std::to_string(prime_);
  }
  return {};
}

bool SquareClassVector::dot(const SquareClassVector& other) const {
  if (place != other.place) throw InvalidInput("square classes live at different places");
  return std::popcount(static_cast<unsigned>(bits & other.bits)) & 1;
}

SquareClassVector SquareClassVector::operator^(const SquareClassVector& other) const {
  if (place != other.place) throw InvalidInput("square classes live at different places");
  return {place, static_cast<std::uint8_t>(bits ^ other.bits)};
}

std::string SquareClassVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < dimension(); ++i) s += coord(i) ? '1' : '0';
  return s;
}

int legendre(std::int64_t a, std::int64_t p) {
  if (p < 3 || (p & 1) == 0 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw InvalidInput("legendre: " + std::to_string(p) + " is not an odd prime");
  }
  return jacobi(a, p);
}

SquareClassVector square_class_coords(std::int64_t r, const Place& v) {
  require_nonzero(r, "square class representative");
  switch (v.kind()) {
    case Place::Kind::infinity:
      return {v, static_cast<std::uint8_t>(r < 0 ? 1 : 0)};
    case Place::Kind::two: {
      const auto [alpha, u] = split_valuation(r, 2);
      std::uint8_t bits = two_adic_unit_bits(u);
      if (alpha & 1) bits ^= kTwoAdicClassOfTwo;
      return {v, bits};
    }
    case Place::Kind::odd: {
      // r = p^alpha u: nonresidue units are -1 ~ (-p)(p) = (1,1); p itself is (0,1).
      const auto [alpha, u] = split_valuation(r, v.prime());
      const int c1 = jacobi(u, v.prime()) == -1 ? 1 : 0;
      const int c2 = (alpha + c1) & 1;
      return {v, static_cast<std::uint8_t>((c1 << 1) | c2)};
    }
  }
  return {v, 0};
}

bool hilbert_symbol(std::int64_t a, std::int64_t b, const Place& v) {
  require_nonzero(a, "hilbert symbol argument");
  require_nonzero(b, "hilbert symbol argument");
  switch (v.kind()) {
    case Place::Kind::infinity:
      return a < 0 && b < 0;
    case Place::Kind::two: {
      const auto [alpha, u] = split_valuation(a, 2);
      const auto [beta, w] = split_valuation(b, 2);
      const int e = epsilon(u) * epsilon(w) + alpha * omega(w) + beta * omega(u);
      return e & 1;
    }
    case Place::Kind::odd: {
      const std::int64_t p = v.prime();
      const auto [alpha, u] = split_valuation(a, p);
      const auto [beta, w] = split_valuation(b, p);
      int e = (alpha & 1) * (beta & 1) * epsilon(p);
      if ((beta & 1) && jacobi(u, p) == -1) ++e;
      if ((alpha & 1) && jacobi(w, p) == -1) ++e;
      return e & 1;
    }
  }
  return false;
}

std::vector<std::int64_t> basis_representatives(const Place& v) {
  switch (v.kind()) {
    case Place::Kind::infinity: return {-1};
    case Place::Kind::two: return {-2, -10, -5};
    case Place::Kind::odd: return {-v.prime(), v.prime()};
  }
  return {};
}

BitMatrix gram_matrix(const Place& v) {
  if (v.kind() == Place::Kind::odd && v.prime() % 4 == 1) {
    throw InvalidInput("no Euclidean basis at " + v.to_string() +
                       ": -1 is a square when p = 1 mod 4");
  }
  const auto basis = basis_representatives(v);
  BitMatrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      g.set(i, j, hilbert_symbol(basis[i], basis[j], v));
    }
  }
  return g;
}

std::vector<Place> symbol_support(std::int64_t a, std::int64_t b) {
  require_nonzero(a, "symbol support argument");
  require_nonzero(b, "symbol support argument");
  std::vector<Place> out{Place::infinity(), Place::two()};
  for (auto n : {a, b}) {
    for (const auto& [p, e] : factor(n)) {
      if (p != 2) out.push_back(Place::odd(p));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hilbcode
