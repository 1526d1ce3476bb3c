#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "bjpm/count_table.hpp"
#include "bjpm/rle.hpp"
#include "bjpm/witness_builder.hpp"

namespace bjpm {

struct QueryStats {
  uint64_t rank_calls = 0;
};

struct BuildOptions {
  bool witness = false;       // also record witness positions
  bool compact = false;       // build the count tables on the blocked form
  uint32_t block_size = 64;   // blocked-form tuning, compact mode only
  bool word_updates = true;   // whole-word block updates vs per-entry loop
};

struct IndexBuildInfo {
  uint64_t n = 0;
  uint64_t rho = 0;
  double seconds = 0.0;
  uint64_t stage1_pairs = 0;
  uint64_t workspace_bits = 0;  // peak transient memory during the build
};

/// The queryable index: per-length min/max 1-counts as increment
/// bitvectors, plus optional witness tables. Immutable once built;
/// concurrent readers need no coordination.
class JumbledIndex {
 public:
  JumbledIndex(uint64_t n, uint64_t rho, MonotoneBitvector min_bits, MonotoneBitvector max_bits,
               std::optional<WitnessTables> witnesses);

  uint64_t size() const { return n_; }
  uint64_t rho() const { return rho_; }
  bool has_witnesses() const { return witnesses_.has_value(); }

  /// True iff some substring holds exactly `zeros` 0s and `ones` 1s.
  /// zeros = ones = 0 is trivially true. Total over all inputs.
  bool exists(uint64_t zeros, uint64_t ones, QueryStats* stats = nullptr) const;

  /// (length, ones) form of exists: zeros = k - ones.
  bool exists_with_length(uint64_t k, uint64_t ones, QueryStats* stats = nullptr) const;

  /// 1-based start of a substring with exactly `zeros` 0s and `ones` 1s,
  /// or nothing when no such (non-empty) substring exists. Raises
  /// CapabilityError if the index was built without witnessing.
  std::optional<uint64_t> witness(uint64_t zeros, uint64_t ones,
                                  QueryStats* stats = nullptr) const;

  /// (min, max) count of 1s over substrings of length k; 1 <= k <= size().
  std::pair<uint64_t, uint64_t> range_of_ones(uint64_t k, QueryStats* stats = nullptr) const;

  const MonotoneBitvector& min_bits() const { return min_; }
  const MonotoneBitvector& max_bits() const { return max_; }
  const std::optional<WitnessTables>& witnesses() const { return witnesses_; }

 private:
  uint64_t window_ones(uint64_t start, uint64_t k, QueryStats* stats) const;

  uint64_t n_ = 0;
  uint64_t rho_ = 0;
  MonotoneBitvector min_;
  MonotoneBitvector max_;
  std::optional<WitnessTables> witnesses_;
};

JumbledIndex build_index(const RunLengthString& rls, const BuildOptions& options = {},
                         IndexBuildInfo* info = nullptr);
JumbledIndex build_index(std::string_view bits, const BuildOptions& options = {},
                         IndexBuildInfo* info = nullptr);

}  // namespace bjpm
