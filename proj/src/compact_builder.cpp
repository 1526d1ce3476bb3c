#include "bjpm/compact_builder.hpp"

#include <stdexcept>

namespace bjpm {

uint64_t compact_pair_pass(const RunLengthString& rls, BlockedTable& table) {
  const uint64_t rho = rls.rho();
  uint64_t pairs = 0;
  for (uint64_t i = 0; i < rho; ++i) {
    uint64_t ones = rls.one_runs[i];
    uint64_t zeros = 0;
    ++pairs;
    table.raise(ones, ones);
    for (uint64_t j = i + 1; j < rho; ++j) {
      ones += rls.one_runs[j];
      zeros += rls.zero_runs[j];
      ++pairs;
      table.raise(ones + zeros, ones);
    }
  }
  return pairs;
}

void compact_backward_pass(BlockedTable& table) {
  if (table.size() < 2) return;
  uint64_t buf[BlockedTable::kMaxBlockSize];
  uint64_t right = 0;
  bool have_right = false;
  for (uint64_t b = table.block_count(); b-- > 0;) {
    const uint32_t m = table.entries_in_block(b);
    std::span<uint64_t> view(buf, m);
    table.decode_block(b, view);
    for (uint32_t j = m; j-- > 0;) {
      if (have_right && buf[j] + 1 < right) buf[j] = right - 1;
      right = buf[j];
      have_right = true;
    }
    table.encode_block(b, view);
  }
}

void compact_forward_pass(BlockedTable& table) {
  if (table.size() < 2) return;
  uint64_t buf[BlockedTable::kMaxBlockSize];
  uint64_t left = 0;
  for (uint64_t b = 0; b < table.block_count(); ++b) {
    const uint32_t m = table.entries_in_block(b);
    std::span<uint64_t> view(buf, m);
    table.decode_block(b, view);
    for (uint32_t j = 0; j < m; ++j) {
      if (buf[j] < left) buf[j] = left;
      left = buf[j];
    }
    table.encode_block(b, view);
  }
}

MonotoneBitvector emit_bitvector(const BlockedTable& table) {
  const uint64_t n = table.size();
  std::vector<uint64_t> words((n + 63) / 64, 0);
  uint64_t buf[BlockedTable::kMaxBlockSize];
  uint64_t prev = 0;
  uint64_t idx = 0;
  for (uint64_t b = 0; b < table.block_count(); ++b) {
    const uint32_t m = table.entries_in_block(b);
    std::span<uint64_t> view(buf, m);
    table.decode_block(b, view);
    for (uint32_t j = 0; j < m; ++j, ++idx) {
      const uint64_t v = buf[j];
      if (v < prev || v - prev > 1) {
        throw std::logic_error("blocked table is not unit-step monotone at entry " +
                               std::to_string(idx + 1));
      }
      if (v != prev) words[idx / 64] |= uint64_t{1} << (idx % 64);
      prev = v;
    }
  }
  return MonotoneBitvector(RankBitvector(std::move(words), n));
}

MonotoneBitvector build_max_table_compact(const RunLengthString& rls,
                                          const CompactOptions& options, BuildStats* stats,
                                          WorkspaceTracker* workspace) {
  BlockedTable table(rls.n, options.block_size, workspace, options.word_updates);
  const uint64_t pairs = compact_pair_pass(rls, table);
  if (stats) stats->stage1_pairs += pairs;
  compact_backward_pass(table);
  compact_forward_pass(table);
  return emit_bitvector(table);
}

MonotoneBitvector build_min_table_compact(const RunLengthString& rls,
                                          const CompactOptions& options, BuildStats* stats,
                                          WorkspaceTracker* workspace) {
  const RunLengthString comp = complement(rls);
  ScopedAllocation comp_mem(workspace,
                            (comp.zero_runs.size() + comp.one_runs.size()) * sizeof(uint64_t));
  const MonotoneBitvector zeros_max = build_max_table_compact(comp, options, stats, workspace);
  std::vector<uint64_t> words(zeros_max.bits().words().begin(), zeros_max.bits().words().end());
  ScopedAllocation flip_mem(workspace, words.size() * sizeof(uint64_t));
  for (auto& w : words) w = ~w;
  return MonotoneBitvector(RankBitvector(std::move(words), rls.n));
}

}  // namespace bjpm
