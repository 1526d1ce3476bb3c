#include "bjpm/table_builder.hpp"

#include <cassert>

namespace bjpm {
namespace stages {

uint64_t pair_pass(const RunLengthString& rls, std::span<uint64_t> table,
                   std::span<uint64_t> positions) {
  assert(table.size() == rls.n);
  assert(positions.empty() || positions.size() == rls.n);
  const bool track = !positions.empty();
  const uint64_t rho = rls.rho();
  uint64_t pairs = 0;
  uint64_t start = rls.zero_runs[0] + 1;  // 1-based start of one-run i
  for (uint64_t i = 0; i < rho; ++i) {
    uint64_t ones = rls.one_runs[i];
    uint64_t zeros = 0;
    ++pairs;
    if (ones > table[ones - 1]) {
      table[ones - 1] = ones;
      if (track) positions[ones - 1] = start;
    }
    for (uint64_t j = i + 1; j < rho; ++j) {
      ones += rls.one_runs[j];
      zeros += rls.zero_runs[j];
      ++pairs;
      const uint64_t len = ones + zeros;
      if (ones > table[len - 1]) {
        table[len - 1] = ones;
        if (track) positions[len - 1] = start;
      }
    }
    start += rls.one_runs[i] + rls.zero_runs[i + 1];
  }
  return pairs;
}

void backward_pass(std::span<uint64_t> table, std::span<uint64_t> positions) {
  const bool track = !positions.empty();
  if (table.size() < 2) return;
  for (size_t idx = table.size() - 1; idx-- > 0;) {
    if (table[idx] + 1 < table[idx + 1]) {
      table[idx] = table[idx + 1] - 1;
      if (track) positions[idx] = positions[idx + 1];
    }
  }
}

void forward_pass(std::span<uint64_t> table, std::span<uint64_t> positions) {
  const bool track = !positions.empty();
  const uint64_t n = table.size();
  for (size_t idx = 1; idx < n; ++idx) {
    if (table[idx] < table[idx - 1]) {
      table[idx] = table[idx - 1];
      if (track) {
        uint64_t p = positions[idx - 1];
        const uint64_t k = idx + 1;
        if (p + k - 1 > n) p = n - k + 1;
        positions[idx] = p;
      }
    }
  }
}

void fill_unset_positions([[maybe_unused]] std::span<const uint64_t> table,
                          std::span<uint64_t> positions) {
  for (size_t idx = 0; idx < positions.size(); ++idx) {
    if (positions[idx] == 0) {
      assert(table[idx] == 0);
      positions[idx] = 1;
    }
  }
}

}  // namespace stages

CountTable build_max_table(const RunLengthString& rls, BuildStats* stats,
                           WorkspaceTracker* workspace) {
  CountTable table{TableKind::kMaxOnes, std::vector<uint64_t>(rls.n, 0)};
  ScopedAllocation mem(workspace, rls.n * sizeof(uint64_t));
  const uint64_t pairs = stages::pair_pass(rls, table.values);
  if (stats) stats->stage1_pairs += pairs;
  stages::backward_pass(table.values);
  stages::forward_pass(table.values);
  return table;
}

CountTable build_min_table(const RunLengthString& rls, BuildStats* stats,
                           WorkspaceTracker* workspace) {
  const RunLengthString comp = complement(rls);
  ScopedAllocation mem(workspace,
                       (comp.zero_runs.size() + comp.one_runs.size()) * sizeof(uint64_t));
  CountTable table = build_max_table(comp, stats, workspace);
  // A window of length k with the most 0s has the fewest 1s.
  for (uint64_t idx = 0; idx < table.values.size(); ++idx) {
    table.values[idx] = (idx + 1) - table.values[idx];
  }
  table.kind = TableKind::kMinOnes;
  return table;
}

}  // namespace bjpm
