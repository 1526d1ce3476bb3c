#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace bjpm {

/// Static bit array with constant-time prefix popcount.
///
/// Directory layout: cumulative 1-counts per 512-bit coarse block plus a
/// uint16 within-block count per 64-bit word. A directory level is dropped
/// whenever a single block would cover the whole payload, so the overhead
/// stays below half the payload at every size.
class RankBitvector {
 public:
  RankBitvector() = default;

  /// From a '0'/'1' string; other characters raise InputError.
  explicit RankBitvector(std::string_view bits);

  /// From an LSB-first packed payload: bit i lives in words[i / 64] at
  /// position i % 64. words.size() must equal ceil(n_bits / 64); padding
  /// bits are cleared.
  RankBitvector(std::vector<uint64_t> words, uint64_t n_bits);

  uint64_t size() const { return n_; }
  uint64_t ones() const { return ones_; }

  /// Number of 1s among the first i bits (1-based positions 1..i).
  /// 0 <= i <= size(), else std::out_of_range.
  uint64_t rank1(uint64_t i) const;

  /// Bit at 1-based position i; 1 <= i <= size(), else std::out_of_range.
  bool access(uint64_t i) const;

  std::span<const uint64_t> words() const { return words_; }
  uint64_t payload_bits() const { return words_.size() * 64; }
  uint64_t directory_bits() const {
    return coarse_.size() * 64 + fine_.size() * 16;
  }

  friend bool operator==(const RankBitvector& a, const RankBitvector& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  static constexpr uint64_t kWordsPerCoarse = 8;  // 512-bit coarse blocks

  void build_directory();

  std::vector<uint64_t> words_;
  std::vector<uint64_t> coarse_;  // 1s before each coarse block
  std::vector<uint16_t> fine_;    // 1s before each word, within its coarse block
  uint64_t n_ = 0;
  uint64_t ones_ = 0;
};

}  // namespace bjpm
