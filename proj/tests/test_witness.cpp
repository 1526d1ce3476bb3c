#include <random>
#include <vector>

#include "doctest.h"

#include "bjpm/errors.hpp"
#include "bjpm/table_builder.hpp"
#include "bjpm/witness_builder.hpp"
#include "helpers.hpp"

using namespace bjpm;
using test_support::kRef;

namespace {

void check_positions(const std::string& bits) {
  const RunLengthString rls = encode(bits);
  const WitnessBuild wb = build_witness_tables(rls, bits);
  REQUIRE(wb.max_table == build_max_table(rls));
  REQUIRE(wb.min_table == build_min_table(rls));
  const auto prefix = test_support::prefix_ones(bits);
  const uint64_t n = bits.size();
  for (uint64_t k = 1; k <= n; ++k) {
    const uint64_t p_max = wb.tables.p_max.get(k - 1);
    const uint64_t p_min = wb.tables.p_min.get(k - 1);
    REQUIRE(p_max >= 1);
    REQUIRE(p_max <= n - k + 1);
    REQUIRE(p_min >= 1);
    REQUIRE(p_min <= n - k + 1);
    REQUIRE(prefix[p_max + k - 1] - prefix[p_max - 1] == wb.max_table.at(k));
    REQUIRE(prefix[p_min + k - 1] - prefix[p_min - 1] == wb.min_table.at(k));
  }
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("position passes golden") {
  const RunLengthString r = encode(kRef);
  std::vector<uint64_t> t(12, 0);
  std::vector<uint64_t> p(12, 0);

  stages::pair_pass(r, t, p);
  CHECK(t == std::vector<uint64_t>{1, 2, 3, 0, 4, 0, 5, 0, 6, 0, 7, 0});
  CHECK(p == std::vector<uint64_t>{2, 11, 6, 0, 4, 0, 2, 0, 4, 0, 2, 0});

  stages::backward_pass(t, p);
  CHECK(p == std::vector<uint64_t>{2, 11, 6, 4, 4, 2, 2, 4, 4, 2, 2, 0});

  stages::forward_pass(t, p);
  // Copying position 2 into length 12 would overrun the string, so the
  // final entry clamps to the only start that fits.
  CHECK(p == std::vector<uint64_t>{2, 11, 6, 4, 4, 2, 2, 4, 4, 2, 2, 1});
}

TEST_CASE("reference string tables") {
  const WitnessBuild wb = build_witness_tables(encode(kRef), kRef);
  CHECK(wb.tables.p_max.get(0) == 2);
  CHECK(wb.tables.p_max.get(2) == 6);
  CHECK(wb.tables.p_max.get(11) == 1);
  CHECK(wb.tables.p_min.get(4) == 1);  // length 5 with the fewest 1s starts at 1
  CHECK(wb.tables.source.rank1(12) == 7);
  check_positions(std::string(kRef));
}

TEST_CASE("uniform strings") {
  const std::string ones(4, '1');
  const WitnessBuild wb = build_witness_tables(encode(ones), ones);
  for (uint64_t k = 1; k <= 4; ++k) {
    CHECK(wb.tables.p_max.get(k - 1) == 1);
    CHECK(wb.tables.p_min.get(k - 1) == 1);
  }
  check_positions("000000");  // untouched table entries fall back to start 1
  check_positions("1");
  check_positions("0");
}

TEST_CASE("windows recount exactly on random strings") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t n = 1 + rng() % 256;
    check_positions(test_support::random_bits(rng, n, 0.1 + 0.25 * (trial % 4)));
  }
}

TEST_CASE("exhaustive short strings") {
  for (unsigned n = 1; n <= 10; ++n) {
    for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
      check_positions(test_support::bits_from_value(v, n));
    }
  }
}

TEST_CASE("empty input and mismatched bits") {
  const WitnessBuild wb = build_witness_tables(encode(""), "");
  CHECK(wb.tables.p_max.size() == 0);
  CHECK(wb.tables.source.size() == 0);
  CHECK_THROWS_AS(build_witness_tables(encode("01"), "0"), InputError);
}

}  // TEST_SUITE
