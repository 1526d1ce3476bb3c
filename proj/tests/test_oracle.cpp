#include <random>

#include "doctest.h"

#include "bjpm/oracle.hpp"
#include "bjpm/table_builder.hpp"
#include "helpers.hpp"

using namespace bjpm;
using test_support::kRef;

TEST_SUITE("oracle") {

TEST_CASE("window scan goldens") {
  CHECK(oracle::brute_minmax(kRef, 5) == std::pair<uint64_t, uint64_t>{2, 4});
  CHECK(oracle::brute_minmax(kRef, 12) == std::pair<uint64_t, uint64_t>{7, 7});
  CHECK(oracle::brute_minmax(kRef, 1) == std::pair<uint64_t, uint64_t>{0, 1});
  CHECK_THROWS_AS(oracle::brute_minmax(kRef, 0), std::out_of_range);
  CHECK_THROWS_AS(oracle::brute_minmax(kRef, 13), std::out_of_range);
}

TEST_CASE("existence and witness goldens") {
  CHECK(oracle::brute_exists(kRef, 2, 3));
  CHECK(oracle::brute_witness(kRef, 2, 3) == 2);
  CHECK_FALSE(oracle::brute_exists(kRef, 4, 1));
  CHECK(oracle::brute_witness(kRef, 4, 1) == std::nullopt);
  CHECK(oracle::brute_exists(kRef, 0, 0));
  CHECK(oracle::brute_witness(kRef, 0, 0) == std::nullopt);
  CHECK_FALSE(oracle::brute_exists(kRef, 13, 0));
}

TEST_CASE("quadratic builder golden") {
  CHECK(oracle::build_max_table_quadratic(encode(kRef)).values ==
        std::vector<uint64_t>{1, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7});
  CHECK(oracle::build_max_table_quadratic(encode("0000")).values ==
        std::vector<uint64_t>{0, 0, 0, 0});
  CHECK(oracle::build_max_table_quadratic(encode("")).values.empty());
}

TEST_CASE("all max-table builders agree") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 150; ++trial) {
    const std::string s = test_support::random_bits(rng, 1 + rng() % 256);
    const RunLengthString rls = encode(s);
    const CountTable fast = build_max_table(rls);
    const CountTable slow = oracle::build_max_table_quadratic(rls);
    REQUIRE(slow.values == fast.values);
    for (uint64_t k = 1; k <= rls.n; ++k) {
      REQUIRE(oracle::brute_minmax(s, k).second == fast.at(k));
    }
  }
}

TEST_CASE("profile matches the scan") {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 60; ++trial) {
    const std::string s = test_support::random_bits(rng, 1 + rng() % 128);
    for (uint64_t k = 1; k <= s.size(); ++k) {
      const auto profile = oracle::window_count_profile(s, k);
      const auto [lo, hi] = oracle::brute_minmax(s, k);
      for (uint64_t ones = 0; ones <= k; ++ones) {
        REQUIRE((profile[ones] != 0) == oracle::brute_exists(s, k - ones, ones));
      }
      REQUIRE(profile[lo] != 0);
      REQUIRE(profile[hi] != 0);
    }
  }
}

}  // TEST_SUITE
