#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bjpm/errors.hpp"

namespace bjpm {

/// Fixed-width integers bit-packed LSB-first into 64-bit words: value i
/// occupies stream bits [i*width, (i+1)*width). width == 0 stores nothing
/// and reads back 0.
class PackedIntVector {
 public:
  PackedIntVector() = default;

  PackedIntVector(uint64_t count, uint32_t width) : count_(count), width_(width) {
    check_width(width);
    words_.assign(words_needed(count, width), 0);
  }

  static PackedIntVector from_words(std::vector<uint64_t> words, uint64_t count, uint32_t width) {
    check_width(width);
    if (words.size() != words_needed(count, width)) {
      throw InputError("packed payload word count does not match the element count");
    }
    PackedIntVector v;
    v.words_ = std::move(words);
    v.count_ = count;
    v.width_ = width;
    return v;
  }

  static uint64_t words_needed(uint64_t count, uint32_t width) {
    return (count * width + 63) / 64;
  }

  uint64_t size() const { return count_; }
  uint32_t width() const { return width_; }
  std::span<const uint64_t> words() const { return words_; }
  uint64_t byte_size() const { return words_.size() * sizeof(uint64_t); }

  uint64_t get(uint64_t i) const {
    check_index(i);
    if (width_ == 0) return 0;
    const uint64_t bit = i * width_;
    const uint64_t w = bit / 64;
    const uint64_t off = bit % 64;
    uint64_t v = words_[w] >> off;
    if (off + width_ > 64) {
      v |= words_[w + 1] << (64 - off);
    }
    return v & mask();
  }

  void set(uint64_t i, uint64_t value) {
    check_index(i);
    if (value > mask()) {
      throw std::logic_error("packed value " + std::to_string(value) + " exceeds width " +
                             std::to_string(width_));
    }
    if (width_ == 0) return;
    const uint64_t bit = i * width_;
    const uint64_t w = bit / 64;
    const uint64_t off = bit % 64;
    words_[w] = (words_[w] & ~(mask() << off)) | (value << off);
    if (off + width_ > 64) {
      const uint64_t spill = 64 - off;
      words_[w + 1] = (words_[w + 1] & ~(mask() >> spill)) | (value >> spill);
    }
  }

  friend bool operator==(const PackedIntVector&, const PackedIntVector&) = default;

 private:
  static void check_width(uint32_t width) {
    if (width > 64) throw std::logic_error("packed width exceeds 64 bits");
  }
  void check_index(uint64_t i) const {
    if (i >= count_) {
      throw std::out_of_range("packed index " + std::to_string(i) + " >= size " +
                              std::to_string(count_));
    }
  }
  uint64_t mask() const {
    return width_ == 64 ? ~uint64_t{0} : (uint64_t{1} << width_) - 1;
  }

  std::vector<uint64_t> words_;
  uint64_t count_ = 0;
  uint32_t width_ = 0;
};

}  // namespace bjpm
