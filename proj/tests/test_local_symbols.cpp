#include <doctest.h>

#include <random>

#include "hilbcode/error.hpp"
#include "hilbcode/local_symbols.hpp"
#include "hilbcode/number_theory.hpp"
#include "oracles.hpp"

using namespace hilbcode;

namespace {

std::int64_t random_nonzero(std::mt19937_64& rng, std::int64_t limit) {
  std::int64_t v = 0;
  while (v == 0) v = static_cast<std::int64_t>(rng() % (2 * limit - 1)) - (limit - 1);
  return v;
}

std::vector<Place> euclidean_places_below(std::int64_t limit) {
  std::vector<Place> out{Place::infinity(), Place::two()};
  for (std::int64_t p = 3; p < limit; p += 4) {
    if (is_prime(static_cast<std::uint64_t>(p))) out.push_back(Place::odd(p));
  }
  return out;
}

}  // namespace

TEST_CASE("primality and factoring") {
  CHECK(is_prime(2));
  CHECK(is_prime(39079));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(18446744073709551555ULL));
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    CHECK(is_prime(n) == trial);
  }
  CHECK(factor(12) == std::vector<std::pair<std::int64_t, int>>{{2, 2}, {3, 1}});
  CHECK(factor(-49) == std::vector<std::pair<std::int64_t, int>>{{7, 2}});
  // Product of two primes above a small trial limit cannot be split.
  CHECK_THROWS_AS(factor(1009LL * 1013LL, 100), InvalidInput);
}

TEST_CASE("legendre") {
  CHECK(legendre(1, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK(legendre(7, 3) == 1);
  CHECK(legendre(14, 7) == 0);
  CHECK(legendre(-1, 7) == -1);
  CHECK_THROWS_AS(legendre(3, 9), InvalidInput);
  CHECK_THROWS_AS(legendre(3, 2), InvalidInput);
  for (std::int64_t p : {3, 5, 7, 11, 13, 101, 103}) {
    for (std::int64_t a = -60; a <= 60; ++a) CHECK(legendre(a, p) == oracle::brute_legendre(a, p));
  }
}

TEST_CASE("square_class_coords") {
  CHECK(square_class_coords(3, Place::odd(7)).to_string() == "11");
  CHECK(square_class_coords(7, Place::odd(7)).to_string() == "01");
  CHECK(square_class_coords(-7, Place::odd(7)).to_string() == "10");
  CHECK(square_class_coords(2, Place::odd(7)).to_string() == "00");
  CHECK(square_class_coords(-1, Place::two()).to_string() == "111");
  CHECK(square_class_coords(3, Place::two()).to_string() == "001");
  CHECK(square_class_coords(2, Place::two()).to_string() == "011");
  CHECK(square_class_coords(-2, Place::two()).to_string() == "100");
  CHECK(square_class_coords(-10, Place::two()).to_string() == "010");
  CHECK(square_class_coords(-5, Place::two()).to_string() == "001");
  CHECK(square_class_coords(-3, Place::infinity()).to_string() == "1");
  CHECK(square_class_coords(3, Place::infinity()).to_string() == "0");
  CHECK_THROWS_AS(square_class_coords(0, Place::two()), InvalidInput);
}

TEST_CASE("basis representatives have unit coordinate vectors") {
  for (const auto& v : euclidean_places_below(60)) {
    const auto basis = basis_representatives(v);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto c = square_class_coords(basis[i], v);
      for (std::size_t k = 0; k < c.dimension(); ++k) CHECK(c.coord(k) == (k == i));
    }
  }
}

TEST_CASE("hilbert_symbol examples") {
  CHECK(hilbert_symbol(-1, -1, Place::infinity()));
  CHECK_FALSE(hilbert_symbol(-1, 3, Place::infinity()));
  CHECK(hilbert_symbol(-2, -2, Place::two()));
  CHECK_FALSE(hilbert_symbol(-2, -10, Place::two()));
  CHECK(hilbert_symbol(3, 3, Place::odd(3)));
  CHECK(hilbert_symbol(3, 7, Place::odd(7)));
  CHECK_THROWS_AS(hilbert_symbol(0, 3, Place::two()), InvalidInput);
  CHECK_THROWS_AS(Place::odd(9), InvalidInput);
}

TEST_CASE("hilbert_symbol agrees with brute-force solvability") {
  for (std::int64_t a = -24; a <= 24; ++a) {
    for (std::int64_t b = -24; b <= 24; ++b) {
      if (a == 0 || b == 0) continue;
      CHECK(hilbert_symbol(a, b, Place::two()) == oracle::brute_hilbert(a, b, 2));
      for (std::int64_t p : {3, 5}) CHECK(hilbert_symbol(a, b, Place::odd(p)) == oracle::brute_hilbert(a, b, p));
    }
  }
  for (std::int64_t a : {-14, -7, -3, -1, 2, 3, 7, 21, 98}) {
    for (std::int64_t b : {-7, -6, -1, 3, 5, 7, 49, 14}) {
      CHECK(hilbert_symbol(a, b, Place::odd(7)) == oracle::brute_hilbert(a, b, 7));
    }
  }
}

TEST_CASE("gram_matrix is the identity on Euclidean bases") {
  CHECK(gram_matrix(Place::infinity()) == BitMatrix::identity(1));
  CHECK(gram_matrix(Place::two()) == BitMatrix::identity(3));
  CHECK(gram_matrix(Place::odd(19)) == BitMatrix::identity(2));
  CHECK_THROWS_AS(gram_matrix(Place::odd(5)), InvalidInput);
  CHECK_THROWS_AS(gram_matrix(Place::odd(13)), InvalidInput);
}

TEST_CASE("symbol_support") {
  auto names = [](const std::vector<Place>& places) {
    std::vector<std::string> out;
    for (const auto& v : places) out.push_back(v.to_string());
    return out;
  };
  CHECK(names(symbol_support(-1, -1)) == std::vector<std::string>{"inf", "2"});
  CHECK(names(symbol_support(3, 7)) == std::vector<std::string>{"inf", "2", "3", "7"});
  CHECK(names(symbol_support(12, 5)) == std::vector<std::string>{"inf", "2", "3", "5"});
  CHECK_THROWS_AS(symbol_support(0, 5), InvalidInput);
}

TEST_CASE("symbol laws on random pairs") {
  std::mt19937_64 rng(21);
  const auto places = euclidean_places_below(200);
  for (int t = 0; t < 400; ++t) {
    const auto a = random_nonzero(rng, 10000);
    const auto a2 = random_nonzero(rng, 10000);
    const auto b = random_nonzero(rng, 10000);
    const auto c = random_nonzero(rng, 300);
    std::vector<Place> test_places = places;
    for (const auto& v : symbol_support(a, b)) test_places.push_back(v);
    for (const auto& v : test_places) {
      CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
      CHECK(hilbert_symbol(a * a2, b, v) == (hilbert_symbol(a, b, v) != hilbert_symbol(a2, b, v)));
      CHECK(hilbert_symbol(a * c * c, b, v) == hilbert_symbol(a, b, v));
      CHECK(hilbert_symbol(a, a, v) == hilbert_symbol(a, -1, v));
    }
    bool product = false;
    for (const auto& v : symbol_support(a, b)) product ^= hilbert_symbol(a, b, v);
    CHECK_FALSE(product);
  }
}

TEST_CASE("coordinates are faithful and additive") {
  std::mt19937_64 rng(22);
  const auto places = euclidean_places_below(100);
  for (int t = 0; t < 400; ++t) {
    const auto r = random_nonzero(rng, 100000);
    const auto s = random_nonzero(rng, 100000);
    for (const auto& v : places) {
      const auto cr = square_class_coords(r, v);
      const auto cs = square_class_coords(s, v);
      CHECK(hilbert_symbol(r, s, v) == cr.dot(cs));
      CHECK(square_class_coords(r * s, v) == (cr ^ cs));
    }
  }
  // Valuations above one at an odd place.
  const Place v = Place::odd(7);
  CHECK(square_class_coords(7 * 7 * 3, v) == square_class_coords(3, v));
  CHECK(hilbert_symbol(7 * 7 * 7 * 3, 5, v) == square_class_coords(7 * 7 * 7 * 3, v).dot(square_class_coords(5, v)));
}
