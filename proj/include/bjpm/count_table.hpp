#pragma once

#include <cstdint>
#include <vector>

#include "bjpm/rank_bitvector.hpp"

namespace bjpm {

enum class TableKind { kMaxOnes, kMinOnes };

/// Dense per-length extreme counts: entry k-1 holds, for substring length
/// k, the maximum (or minimum) number of 1s over all windows of that
/// length. Non-decreasing with steps in {0, 1}.
struct CountTable {
  TableKind kind = TableKind::kMaxOnes;
  std::vector<uint64_t> values;

  uint64_t size() const { return values.size(); }
  uint64_t at(uint64_t k) const;  // 1-based length, bounds-checked

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// n-bit form of a non-decreasing unit-step list: bit k is set exactly
/// where the list increments, so a rank query recovers any value.
class MonotoneBitvector {
 public:
  MonotoneBitvector() = default;
  explicit MonotoneBitvector(RankBitvector bits) : bits_(std::move(bits)) {}

  /// List value at 1-based index k; 1 <= k <= size().
  uint64_t value(uint64_t k) const;

  uint64_t size() const { return bits_.size(); }
  const RankBitvector& bits() const { return bits_; }

  friend bool operator==(const MonotoneBitvector& a, const MonotoneBitvector& b) {
    return a.bits_ == b.bits_;
  }

 private:
  RankBitvector bits_;
};

/// Packs a unit-step table into its increment bitvector. A table breaking
/// the unit-step invariant raises std::logic_error: that always means a
/// builder bug, not bad user input.
MonotoneBitvector delta_encode(const CountTable& table);

}  // namespace bjpm
