#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "bjpm/errors.hpp"
#include "bjpm/rle.hpp"
#include "helpers.hpp"

using namespace bjpm;
using test_support::kRef;

TEST_SUITE("rle") {

TEST_CASE("encode goldens") {
  const RunLengthString r = encode(kRef);
  CHECK(r.zero_runs == std::vector<uint64_t>{1, 1, 1, 2, 0});
  CHECK(r.one_runs == std::vector<uint64_t>{1, 1, 3, 2});
  CHECK(r.rho() == 4);
  CHECK(r.n == 12);

  const RunLengthString empty = encode("");
  CHECK(empty.zero_runs == std::vector<uint64_t>{0});
  CHECK(empty.one_runs.empty());
  CHECK(empty.rho() == 0);
  CHECK(empty.n == 0);

  const RunLengthString ones = encode("1111");
  CHECK(ones.zero_runs == std::vector<uint64_t>{0, 0});
  CHECK(ones.one_runs == std::vector<uint64_t>{4});
  CHECK(ones.rho() == 1);
  CHECK(ones.n == 4);
}

TEST_CASE("encode rejects non-binary characters with a position") {
  CHECK_THROWS_AS(encode("0102"), InputError);
  try {
    encode("0102");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
  CHECK_THROWS_AS(encode(" 01"), InputError);
}

TEST_CASE("decode goldens") {
  CHECK(decode(RunLengthString{{1, 1, 1, 2, 0}, {1, 1, 3, 2}, 12}) == kRef);
  CHECK(decode(RunLengthString{{0}, {}, 0}) == "");
  CHECK(decode(RunLengthString{{3, 0}, {2}, 5}) == "00011");
}

TEST_CASE("decode validates its input") {
  CHECK_THROWS_AS(decode(RunLengthString{{1, 0, 1}, {1, 1}, 4}), InputError);   // interior zero
  CHECK_THROWS_AS(decode(RunLengthString{{1, 1}, {0}, 2}), InputError);         // empty one-run
  CHECK_THROWS_AS(decode(RunLengthString{{1, 1}, {1}, 5}), InputError);         // n mismatch
  CHECK_THROWS_AS(decode(RunLengthString{{1, 1, 1}, {1}, 4}), InputError);      // shape mismatch
}

TEST_CASE("totals") {
  const RunLengthString r = encode(kRef);
  CHECK(total_ones(r) == 7);
  CHECK(total_zeros(r) == 5);
  CHECK(total_ones(encode("")) == 0);
  CHECK(total_zeros(encode("")) == 0);
  CHECK(total_ones(encode("1111")) == 4);
  CHECK(total_zeros(encode("1111")) == 0);
}

TEST_CASE("round trip over random and exhaustive corpora") {
  for (unsigned n = 0; n <= 10; ++n) {
    for (uint64_t v = 0; v < (uint64_t{1} << n); ++v) {
      const std::string s = test_support::bits_from_value(v, n);
      const RunLengthString r = encode(s);
      validate(r);
      CHECK(decode(r) == s);
      CHECK(encode(decode(r)) == r);
      CHECK(total_ones(r) + total_zeros(r) == r.n);
    }
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const size_t n = rng() % 300;
    const std::string s = test_support::random_bits(rng, n, 0.2 + 0.6 * (trial % 3));
    const RunLengthString r = encode(s);
    validate(r);
    REQUIRE(decode(r) == s);
    REQUIRE(encode(decode(r)) == r);
  }
}

TEST_CASE("complement flips the decoded bits and is an involution") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string s = test_support::random_bits(rng, rng() % 200);
    const RunLengthString r = encode(s);
    const RunLengthString c = complement(r);
    validate(c);
    std::string flipped = s;
    for (auto& ch : flipped) ch = ch == '0' ? '1' : '0';
    REQUIRE(decode(c) == flipped);
    REQUIRE(complement(c) == r);
  }
  CHECK(complement(encode("")) == encode(""));
  CHECK(complement(encode("1111")) == encode("0000"));
}

TEST_CASE("text format golden and round trip") {
  CHECK(format_rle_text(encode(kRef)) == "0:1 1:1 0:1 1:1 0:1 1:3 0:2 1:2 0:0");
  CHECK(format_rle_text(encode("")) == "0:0");
  CHECK(parse_rle_text("0:1 1:1 0:1 1:1 0:1 1:3 0:2 1:2 0:0") == encode(kRef));
  CHECK(parse_rle_text("0:0") == encode(""));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const RunLengthString r = encode(test_support::random_bits(rng, rng() % 150));
    REQUIRE(parse_rle_text(format_rle_text(r)) == r);
  }
}

TEST_CASE("text format rejects malformed lines") {
  CHECK_THROWS_AS(parse_rle_text("1:1 0:1"), InputError);            // starts with a one-run
  CHECK_THROWS_AS(parse_rle_text("0:1 1:2"), InputError);            // ends with a one-run
  CHECK_THROWS_AS(parse_rle_text("0:1 1:a 0:1"), InputError);        // bad length
  CHECK_THROWS_AS(parse_rle_text("0:1 1:0 0:1"), InputError);        // empty one-run
  CHECK_THROWS_AS(parse_rle_text("0:1 1:1 0:0 1:1 0:0"), InputError);  // interior zero
  CHECK_THROWS_AS(parse_rle_text("0:1  1:1 0:0"), InputError);       // doubled space
  CHECK_THROWS_AS(parse_rle_text(""), InputError);
  CHECK_THROWS_AS(parse_rle_text("0:-1"), InputError);
}

}  // TEST_SUITE
