#pragma once

#include <cstdint>

#include "bjpm/blocked_table.hpp"
#include "bjpm/count_table.hpp"
#include "bjpm/rle.hpp"
#include "bjpm/table_builder.hpp"
#include "bjpm/workspace.hpp"

namespace bjpm {

struct CompactOptions {
  uint32_t block_size = BlockedTable::kDefaultBlockSize;
  bool word_updates = true;
};

/// The dense builder's pair pass replayed onto a BlockedTable.
/// Returns the number of run pairs visited.
uint64_t compact_pair_pass(const RunLengthString& rls, BlockedTable& table);

/// The dense backward/forward passes, rewriting each block once and
/// carrying a single running value across block boundaries.
void compact_backward_pass(BlockedTable& table);
void compact_forward_pass(BlockedTable& table);

/// Increment bitvector of the table's current contents.
MonotoneBitvector emit_bitvector(const BlockedTable& table);

/// Max-ones table built entirely on the blocked form; the output is
/// bit-identical to delta_encode(build_max_table(rls)).
MonotoneBitvector build_max_table_compact(const RunLengthString& rls,
                                          const CompactOptions& options = {},
                                          BuildStats* stats = nullptr,
                                          WorkspaceTracker* workspace = nullptr);

/// Min-ones bitvector on the blocked form: build the complement's max
/// table and flip its increment bits (min(k) = k - max_zeros(k) makes the
/// two delta streams exact complements).
MonotoneBitvector build_min_table_compact(const RunLengthString& rls,
                                          const CompactOptions& options = {},
                                          BuildStats* stats = nullptr,
                                          WorkspaceTracker* workspace = nullptr);

}  // namespace bjpm
