#include <doctest.h>

#include <random>

#include "hilbcode/error.hpp"
#include "hilbcode/hilbert_code.hpp"
#include "hilbcode/number_theory.hpp"
#include "oracles.hpp"

using namespace hilbcode;

namespace {

PlaceSet places(std::initializer_list<std::int64_t> primes) {
  const std::vector<std::int64_t> v(primes);
  return verify_place_set(v);
}

std::vector<std::int64_t> primes_3_mod_4_below(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 3; p < limit; p += 4) {
    if (is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
  }
  return out;
}

const std::vector<std::int64_t> kGolayPrimes = {7, 19, 31, 131, 179, 367, 883, 1223, 1307, 39079};

}  // namespace

TEST_CASE("verify_place_set") {
  CHECK(places({7, 3}).primes() == std::vector<std::int64_t>{3, 7});
  CHECK(places({}).n() == 2);
  auto message = [](std::vector<std::int64_t> v) {
    try {
      verify_place_set(v);
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message({5}) == "5 ≡ 1 mod 4");
  CHECK(message({9}) == "9 composite");
  CHECK(message({3, 3}) == "3 duplicate");
  CHECK(message({2}).find("2 listed explicitly") == 0);
  CHECK(message({-3}) == "-3 is not a prime");
}

TEST_CASE("generator_matrix examples") {
  CHECK(generator_matrix(places({})).to_strings() == std::vector<std::string>{"0110", "1111"});
  CHECK(generator_matrix(places({3, 7})).to_strings() ==
        std::vector<std::string>{"01110010", "00011110", "11000110", "11111111"});
  CHECK(generator_matrix(places({3})).to_strings() ==
        std::vector<std::string>{"010010", "110110", "111111"});
  CHECK(places({3, 7}).s_units() == std::vector<std::int64_t>{3, 7, 2, -1});
}

TEST_CASE("Golay place set gives a doubly-even [24, 12, 8] code") {
  const auto meta = code_metadata(verify_place_set(kGolayPrimes));
  CHECK(meta.generator.rows() == 12);
  CHECK(meta.generator.cols() == 24);
  CHECK(is_self_dual_generator(meta.generator));
  REQUIRE(meta.weight_enumerator);
  CHECK(oracle::as_map(*meta.weight_enumerator) ==
        std::map<std::size_t, std::uint64_t>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
  CHECK(meta.min_distance == 8);
}

TEST_CASE("code_metadata") {
  const auto e8 = code_metadata(places({3, 7}));
  CHECK(e8.min_distance == 4);
  CHECK(oracle::as_map(*e8.weight_enumerator) ==
        std::map<std::size_t, std::uint64_t>{{0, 1}, {4, 14}, {8, 1}});
  CHECK(e8.blocks == blocks_of(e8.generator));
  CHECK(code_metadata(places({})).min_distance == 2);

  // 27 primes put n at 29, past the enumeration guard.
  const auto many = primes_3_mod_4_below(300);
  REQUIRE(many.size() >= 27);
  const std::vector<std::int64_t> big(many.begin(), many.begin() + 27);
  const auto large = code_metadata(verify_place_set(big));
  CHECK_FALSE(large.weight_enumerator);
  CHECK_FALSE(large.min_distance);
  CHECK(is_self_dual_generator(large.generator));
  CHECK(is_boxed(large.blocks));
}

TEST_CASE("Hilbert codes are self-dual and boxed") {
  std::mt19937_64 rng(31);
  const auto pool = primes_3_mod_4_below(2000);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::int64_t> chosen = pool;
    std::shuffle(chosen.begin(), chosen.end(), rng);
    chosen.resize(rng() % 12);
    const auto s = verify_place_set(chosen);
    const auto g = generator_matrix(s);
    CHECK(is_self_dual_generator(g));
    CHECK(is_boxed(blocks_of(g)));
  }
}

TEST_CASE("prime blocks follow quadratic residues") {
  const auto s = places({3, 7, 11, 19, 23, 31});
  const auto b = blocks_of(generator_matrix(s));
  const auto& p = s.primes();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i == j) continue;
      CHECK((b.at(i, j) == kBlock00) == (oracle::brute_legendre(p[i], p[j]) == 1));
      CHECK(b.at(i, j).is_identical());
    }
  }
}

TEST_CASE("row orthogonality matches quadratic reciprocity") {
  std::vector<std::int64_t> odd_primes;
  for (std::int64_t p = 3; p < 1000; p += 2) {
    if (is_prime(static_cast<std::uint64_t>(p))) odd_primes.push_back(p);
  }
  for (auto p : odd_primes) {
    for (auto q : odd_primes) {
      if (p >= q) continue;
      const bool flips = legendre(p, q) == -legendre(q, p);
      CHECK(flips == (p % 4 == 3 && q % 4 == 3));
      if (p % 4 == 3 && q % 4 == 3) {
        const auto g = generator_matrix(places({p, q}));
        CHECK_FALSE(g.row(0).dot(g.row(1)));
      }
    }
  }
}
