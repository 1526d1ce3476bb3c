#include "bjpm/blocked_table.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

namespace bjpm {

namespace {

// 0-based index of the k-th (1-based) set bit; popcount(word) >= k required.
inline unsigned nth_set_bit(uint64_t word, uint64_t k) {
#if defined(__BMI2__)
  return static_cast<unsigned>(std::countr_zero(_pdep_u64(uint64_t{1} << (k - 1), word)));
#else
  for (unsigned byte = 0;; ++byte) {
    uint64_t chunk = (word >> (8 * byte)) & 0xFFu;
    const uint64_t pc = static_cast<uint64_t>(std::popcount(chunk));
    if (k <= pc) {
      while (--k) chunk &= chunk - 1;
      return 8 * byte + static_cast<unsigned>(std::countr_zero(chunk));
    }
    k -= pc;
  }
#endif
}

// Mask covering the delta bits of steps 2..t (bits 0..t-2); 0 when t < 2.
inline uint64_t steps_up_to(uint32_t t) {
  return t < 2 ? 0 : (t - 1 == 64 ? ~uint64_t{0} : (uint64_t{1} << (t - 1)) - 1);
}

// Mask covering the delta bits of steps x..y inclusive; requires 2 <= x <= y.
inline uint64_t steps_range(uint32_t x, uint32_t y) {
  return steps_up_to(y) & ~steps_up_to(x - 1);
}

}  // namespace

BlockedTable::BlockedTable(uint64_t n, uint32_t block_size, WorkspaceTracker* workspace,
                           bool word_updates)
    : n_(n), block_(block_size), word_updates_(word_updates), workspace_(workspace) {
  if (block_ < 2 || block_ > kMaxBlockSize) {
    throw std::logic_error("block size must be between 2 and 64 entries");
  }
  const uint64_t blocks = (n_ + block_ - 1) / block_;
  deltas_.assign(blocks, 0);
  firsts_ = PackedIntVector(blocks, static_cast<uint32_t>(std::bit_width(n_)));
  tracked_bytes_ = deltas_.size() * sizeof(uint64_t) + firsts_.byte_size();
  if (workspace_) workspace_->add(tracked_bytes_);
}

BlockedTable::BlockedTable(BlockedTable&& other) noexcept
    : deltas_(std::move(other.deltas_)),
      firsts_(std::move(other.firsts_)),
      n_(other.n_),
      block_(other.block_),
      word_updates_(other.word_updates_),
      workspace_(other.workspace_),
      tracked_bytes_(other.tracked_bytes_) {
  other.workspace_ = nullptr;
  other.tracked_bytes_ = 0;
}

BlockedTable::~BlockedTable() {
  if (workspace_) workspace_->remove(tracked_bytes_);
}

uint32_t BlockedTable::entries_in_block(uint64_t b) const {
  if (b >= deltas_.size()) {
    throw std::out_of_range("block index " + std::to_string(b) + " >= " +
                            std::to_string(deltas_.size()));
  }
  return static_cast<uint32_t>(std::min<uint64_t>(block_, n_ - b * block_));
}

uint64_t BlockedTable::get(uint64_t i) const {
  if (i < 1 || i > n_) {
    throw std::out_of_range("entry " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }
  const uint64_t b = (i - 1) / block_;
  const uint32_t t = static_cast<uint32_t>(i - b * block_);
  return firsts_.get(b) +
         static_cast<uint64_t>(std::popcount(deltas_[b] & steps_up_to(t)));
}

void BlockedTable::raise(uint64_t i, uint64_t v) {
  if (i < 1 || i > n_) {
    throw std::out_of_range("entry " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }
  if (v > i) {
    throw std::logic_error("count " + std::to_string(v) + " exceeds window length " +
                           std::to_string(i));
  }
  const uint64_t b = (i - 1) / block_;
  const uint32_t t = static_cast<uint32_t>(i - b * block_);  // local 1-based
  const uint32_t m = entries_in_block(b);
  const uint64_t first = firsts_.get(b);
  const uint64_t word = deltas_[b];
  const uint64_t cur =
      first + static_cast<uint64_t>(std::popcount(word & steps_up_to(t)));
  if (v <= cur) return;
  if (word_updates_) {
    raise_word(b, t, m, first, word, v);
  } else {
    raise_loop(b, t, m, v);
  }
}

// The floor implied by raising entry t to v crosses the stored staircase
// on one contiguous stretch [a, bend] around t: the stored values rise by
// at most one per step while the floor rises by exactly one up to t and is
// flat after it. Inside the stretch the new steps are forced (1 up to t,
// 0 after), outside them nothing changes, and the stretch ends exactly
// where the stored staircase catches up.
void BlockedTable::raise_word(uint64_t b, uint32_t t, uint32_t m, uint64_t first, uint64_t word,
                              uint64_t v) {
  const uint64_t g = v - first;  // target relative to the block's first value
  uint32_t a;
  if (g >= t) {
    a = 1;
  } else {
    // First entry below the floor: where the (t - g)-th zero step sits.
    const uint64_t zeros = ~word & steps_up_to(m);
    a = nth_set_bit(zeros, t - g) + 2;
  }
  uint32_t bend;
  const uint64_t ones = word & steps_up_to(m);
  if (static_cast<uint64_t>(std::popcount(ones)) >= g) {
    bend = nth_set_bit(ones, g) + 1;  // entry before the g-th stored step
  } else {
    bend = m;
  }
  assert(a <= t && t <= bend);
  uint64_t set_mask = 0;
  const uint32_t lo = std::max(a, 2u);
  if (lo <= t) set_mask = steps_range(lo, t);
  uint64_t clear_mask = 0;
  const uint32_t zhi = std::min(bend + 1, m);
  if (t + 1 <= zhi) clear_mask = steps_range(t + 1, zhi);
  deltas_[b] = (word | set_mask) & ~clear_mask;
  if (a == 1) firsts_.set(b, v - (t - 1));
}

void BlockedTable::raise_loop(uint64_t b, uint32_t t, uint32_t m, uint64_t v) {
  uint64_t buf[kMaxBlockSize];
  std::span<uint64_t> view(buf, m);
  decode_block(b, view);
  for (uint32_t j = 1; j <= m; ++j) {
    const uint64_t floor = j <= t ? (t - j < v ? v - (t - j) : 0) : v;
    buf[j - 1] = std::max(buf[j - 1], floor);
  }
  encode_block(b, view);
}

void BlockedTable::decode_block(uint64_t b, std::span<uint64_t> values) const {
  const uint32_t m = entries_in_block(b);
  assert(values.size() >= m);
  uint64_t v = firsts_.get(b);
  const uint64_t word = deltas_[b];
  values[0] = v;
  for (uint32_t j = 1; j < m; ++j) {
    v += (word >> (j - 1)) & 1;
    values[j] = v;
  }
}

void BlockedTable::encode_block(uint64_t b, std::span<const uint64_t> values) {
  const uint32_t m = entries_in_block(b);
  assert(values.size() >= m);
  uint64_t word = 0;
  for (uint32_t j = 1; j < m; ++j) {
    const uint64_t step = values[j] - values[j - 1];
    if (values[j] < values[j - 1] || step > 1) {
      throw std::logic_error("block contents are not unit-step monotone");
    }
    word |= step << (j - 1);
  }
  firsts_.set(b, values[0]);
  deltas_[b] = word;
}

std::string BlockedTable::block_delta_string(uint64_t b) const {
  const uint32_t m = entries_in_block(b);
  std::string out;
  for (uint32_t j = 1; j < m; ++j) {
    out += ((deltas_[b] >> (j - 1)) & 1) ? '1' : '0';
  }
  return out;
}

}  // namespace bjpm
