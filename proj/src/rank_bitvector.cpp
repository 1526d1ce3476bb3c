#include "bjpm/rank_bitvector.hpp"

#include <bit>
#include <stdexcept>

#include "bjpm/errors.hpp"

namespace bjpm {

RankBitvector::RankBitvector(std::string_view bits) : n_(bits.size()) {
  words_.assign((n_ + 63) / 64, 0);
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      words_[i / 64] |= uint64_t{1} << (i % 64);
    } else if (bits[i] != '0') {
      throw InputError(std::string("input is not binary: character '") + bits[i] +
                       "' at position " + std::to_string(i + 1));
    }
  }
  build_directory();
}

RankBitvector::RankBitvector(std::vector<uint64_t> words, uint64_t n_bits)
    : words_(std::move(words)), n_(n_bits) {
  if (words_.size() != (n_ + 63) / 64) {
    throw InputError("payload word count does not match the bit length");
  }
  if (n_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
  }
  build_directory();
}

void RankBitvector::build_directory() {
  const size_t n_words = words_.size();
  if (n_words > kWordsPerCoarse) {
    coarse_.assign((n_words + kWordsPerCoarse - 1) / kWordsPerCoarse, 0);
  }
  if (n_words > 1) {
    fine_.assign(n_words, 0);
  }
  uint64_t total = 0;
  uint64_t in_block = 0;
  for (size_t w = 0; w < n_words; ++w) {
    if (w % kWordsPerCoarse == 0) {
      if (!coarse_.empty()) coarse_[w / kWordsPerCoarse] = total;
      in_block = 0;
    }
    if (!fine_.empty()) fine_[w] = static_cast<uint16_t>(in_block);
    const uint64_t pop = static_cast<uint64_t>(std::popcount(words_[w]));
    in_block += pop;
    total += pop;
  }
  ones_ = total;
}

uint64_t RankBitvector::rank1(uint64_t i) const {
  if (i > n_) {
    throw std::out_of_range("rank1: position " + std::to_string(i) + " > length " +
                            std::to_string(n_));
  }
  if (i == n_) return ones_;
  const uint64_t w = i / 64;
  const uint64_t off = i % 64;
  uint64_t r = coarse_.empty() ? 0 : coarse_[w / kWordsPerCoarse];
  if (!fine_.empty()) r += fine_[w];
  if (off != 0) {
    r += static_cast<uint64_t>(std::popcount(words_[w] & ((uint64_t{1} << off) - 1)));
  }
  return r;
}

bool RankBitvector::access(uint64_t i) const {
  if (i < 1 || i > n_) {
    throw std::out_of_range("access: position " + std::to_string(i) + " outside 1.." +
                            std::to_string(n_));
  }
  const uint64_t b = i - 1;
  return (words_[b / 64] >> (b % 64)) & 1;
}

}  // namespace bjpm
