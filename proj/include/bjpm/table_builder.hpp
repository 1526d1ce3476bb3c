#pragma once

#include <cstdint>
#include <span>

#include "bjpm/count_table.hpp"
#include "bjpm/rle.hpp"
#include "bjpm/workspace.hpp"

namespace bjpm {

struct BuildStats {
  uint64_t stage1_pairs = 0;  // run pairs visited by the pair pass
};

// The table is built in three passes over a zero-initialized array of n
// entries (entry k-1 holds the value for window length k). `positions`,
// when non-empty, receives the 1-based start of a window realizing each
// recorded count; 0 marks a still-unset entry.
namespace stages {

/// For every ordered pair of one-runs (i <= j), records the count of 1s in
/// the window from run i's start to run j's end under the window's length,
/// keeping the larger count; ties keep the earlier pair. Returns the number
/// of pairs visited.
uint64_t pair_pass(const RunLengthString& rls, std::span<uint64_t> table,
                   std::span<uint64_t> positions = {});

/// Right-to-left: raise each entry to its right neighbor minus one.
void backward_pass(std::span<uint64_t> table, std::span<uint64_t> positions = {});

/// Left-to-right: raise each entry to its left neighbor. A copied start is
/// clamped to n - k + 1 so the window still fits.
void forward_pass(std::span<uint64_t> table, std::span<uint64_t> positions = {});

/// Entries the passes never touched hold count 0, which any window
/// realizes; point them at position 1.
void fill_unset_positions(std::span<const uint64_t> table, std::span<uint64_t> positions);

}  // namespace stages

/// Max-ones table in O(n + rho^2) time.
CountTable build_max_table(const RunLengthString& rls, BuildStats* stats = nullptr,
                           WorkspaceTracker* workspace = nullptr);

/// Min-ones table via the complement string: min(k) = k - max_zeros(k).
CountTable build_min_table(const RunLengthString& rls, BuildStats* stats = nullptr,
                           WorkspaceTracker* workspace = nullptr);

}  // namespace bjpm
