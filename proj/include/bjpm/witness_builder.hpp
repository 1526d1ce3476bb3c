#pragma once

#include <cstdint>
#include <string_view>

#include "bjpm/count_table.hpp"
#include "bjpm/packed_ints.hpp"
#include "bjpm/rle.hpp"
#include "bjpm/table_builder.hpp"
#include "bjpm/workspace.hpp"

namespace bjpm {

/// Per-length witness starts plus the source bits they point into.
/// Entry k-1 of p_max is the 1-based start of a length-k window holding
/// exactly the max count of 1s for that length; p_min likewise for the
/// min count. Stored at ceil(log2(n+1)) bits per position.
struct WitnessTables {
  PackedIntVector p_max;
  PackedIntVector p_min;
  RankBitvector source;
};

struct WitnessBuild {
  CountTable max_table;
  CountTable min_table;
  WitnessTables tables;
};

/// Runs the three table passes while recording window starts, on the
/// string and on its complement (a window minimizing 1s maximizes the
/// complement's 1s at the same position). `bits` must decode `rls`.
WitnessBuild build_witness_tables(const RunLengthString& rls, std::string_view bits,
                                  BuildStats* stats = nullptr,
                                  WorkspaceTracker* workspace = nullptr);

}  // namespace bjpm
