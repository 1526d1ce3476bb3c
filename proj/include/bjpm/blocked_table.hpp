#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bjpm/packed_ints.hpp"
#include "bjpm/workspace.hpp"

namespace bjpm {

/// Working form of the count table for the low-memory builder: per block
/// of `block_size` entries, one explicit first value plus one increment
/// bit per following entry. Raising entry i also lifts the rest of its
/// block to the floor the new value implies (a unit ramp up to i, a
/// plateau after it), so every block stays unit-step monotone and a whole
/// update fits in one delta-word rewrite.
class BlockedTable {
 public:
  static constexpr uint32_t kDefaultBlockSize = 64;
  static constexpr uint32_t kMaxBlockSize = 64;

  BlockedTable(uint64_t n, uint32_t block_size = kDefaultBlockSize,
               WorkspaceTracker* workspace = nullptr, bool word_updates = true);
  BlockedTable(const BlockedTable&) = delete;
  BlockedTable& operator=(const BlockedTable&) = delete;
  BlockedTable(BlockedTable&& other) noexcept;
  BlockedTable& operator=(BlockedTable&&) = delete;
  ~BlockedTable();

  uint64_t size() const { return n_; }
  uint32_t block_size() const { return block_; }
  uint64_t block_count() const { return deltas_.size(); }
  bool word_updates() const { return word_updates_; }

  /// Decoded value at 1-based entry i becomes max(old, v). v must not
  /// exceed i (no window of length i holds more than i ones).
  void raise(uint64_t i, uint64_t v);

  /// Decoded value at 1-based entry i.
  uint64_t get(uint64_t i) const;

  // Block inspection; b is 0-based.
  uint32_t entries_in_block(uint64_t b) const;
  uint64_t block_first(uint64_t b) const { return firsts_.get(b); }
  uint64_t block_delta_word(uint64_t b) const { return deltas_[b]; }
  /// Increment bits in entry order, e.g. "110" for a 4-entry block whose
  /// second and third entries step up.
  std::string block_delta_string(uint64_t b) const;

  // Bulk access for the pass code; `values` covers entries_in_block(b).
  void decode_block(uint64_t b, std::span<uint64_t> values) const;
  void encode_block(uint64_t b, std::span<const uint64_t> values);

 private:
  void raise_word(uint64_t b, uint32_t t, uint32_t m, uint64_t first, uint64_t word, uint64_t v);
  void raise_loop(uint64_t b, uint32_t t, uint32_t m, uint64_t v);

  std::vector<uint64_t> deltas_;  // one word per block; step t at bit t-2
  PackedIntVector firsts_;
  uint64_t n_ = 0;
  uint32_t block_ = kDefaultBlockSize;
  bool word_updates_ = true;
  WorkspaceTracker* workspace_ = nullptr;
  uint64_t tracked_bytes_ = 0;
};

}  // namespace bjpm
