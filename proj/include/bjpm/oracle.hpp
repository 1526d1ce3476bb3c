#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bjpm/count_table.hpp"
#include "bjpm/rle.hpp"

// Brute-force reference implementations for tests and the verify command.
// They work on the raw bit string wherever possible and never share code
// with the fast paths.
namespace bjpm::oracle {

/// Exact (min, max) 1-counts over all length-k windows, by scanning.
std::pair<uint64_t, uint64_t> brute_minmax(std::string_view bits, uint64_t k);

/// Window scan for a substring with exactly the given 0s and 1s.
bool brute_exists(std::string_view bits, uint64_t zeros, uint64_t ones);

/// Leftmost such window's 1-based start, if any (none for the empty
/// query).
std::optional<uint64_t> brute_witness(std::string_view bits, uint64_t zeros, uint64_t ones);

/// flags[c] != 0 iff some length-k window holds exactly c ones; size k+1.
std::vector<uint8_t> window_count_profile(std::string_view bits, uint64_t k);

/// Slower reference builder: pairs every one-run start with every position
/// inside a one-run, then runs one left-to-right maximum pass.
CountTable build_max_table_quadratic(const RunLengthString& rls);

}  // namespace bjpm::oracle
