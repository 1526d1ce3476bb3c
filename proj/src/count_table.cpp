#include "bjpm/count_table.hpp"

#include <stdexcept>
#include <string>

namespace bjpm {

uint64_t CountTable::at(uint64_t k) const {
  if (k < 1 || k > values.size()) {
    throw std::out_of_range("table length " + std::to_string(k) + " outside 1.." +
                            std::to_string(values.size()));
  }
  return values[k - 1];
}

uint64_t MonotoneBitvector::value(uint64_t k) const {
  if (k < 1 || k > bits_.size()) {
    throw std::out_of_range("list index " + std::to_string(k) + " outside 1.." +
                            std::to_string(bits_.size()));
  }
  return bits_.rank1(k);
}

MonotoneBitvector delta_encode(const CountTable& table) {
  const uint64_t n = table.values.size();
  std::vector<uint64_t> words((n + 63) / 64, 0);
  uint64_t prev = 0;
  for (uint64_t i = 0; i < n; ++i) {
    const uint64_t v = table.values[i];
    if (v < prev || v - prev > 1) {
      throw std::logic_error("delta_encode: table is not unit-step monotone at length " +
                             std::to_string(i + 1));
    }
    if (v != prev) {
      words[i / 64] |= uint64_t{1} << (i % 64);
    }
    prev = v;
  }
  return MonotoneBitvector(RankBitvector(std::move(words), n));
}

}  // namespace bjpm
