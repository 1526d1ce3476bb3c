#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bjpm/rank_bitvector.hpp"

namespace test_support {

// 12-bit reference string used by most goldens:
// runs 0^1 1^1 0^1 1^1 0^1 1^3 0^2 1^2 0^0.
inline constexpr std::string_view kRef = "010101110011";

inline std::string random_bits(std::mt19937_64& rng, size_t n, double one_prob = 0.5) {
  std::string s(n, '0');
  for (auto& c : s) {
    if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < one_prob) c = '1';
  }
  return s;
}

// String whose bit i (1-based) is bit i-1 of `value`; enumerating value
// over 0..2^n-1 walks every binary string of length n.
inline std::string bits_from_value(uint64_t value, unsigned n) {
  std::string s(n, '0');
  for (unsigned i = 0; i < n; ++i) {
    if ((value >> i) & 1) s[i] = '1';
  }
  return s;
}

inline std::string to_string(const bjpm::RankBitvector& v) {
  std::string s(v.size(), '0');
  for (uint64_t i = 1; i <= v.size(); ++i) {
    if (v.access(i)) s[i - 1] = '1';
  }
  return s;
}

inline std::vector<uint64_t> prefix_ones(std::string_view bits) {
  std::vector<uint64_t> p(bits.size() + 1, 0);
  for (size_t i = 0; i < bits.size(); ++i) p[i + 1] = p[i] + (bits[i] == '1');
  return p;
}

}  // namespace test_support
