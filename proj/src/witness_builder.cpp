#include "bjpm/witness_builder.hpp"

#include <bit>

#include "bjpm/errors.hpp"

namespace bjpm {

namespace {

// Table plus positions for one side, dense while the passes run.
void run_all_stages(const RunLengthString& rls, std::vector<uint64_t>& table,
                    std::vector<uint64_t>& positions, BuildStats* stats) {
  const uint64_t pairs = stages::pair_pass(rls, table, positions);
  if (stats) stats->stage1_pairs += pairs;
  stages::backward_pass(table, positions);
  stages::forward_pass(table, positions);
  stages::fill_unset_positions(table, positions);
}

}  // namespace

WitnessBuild build_witness_tables(const RunLengthString& rls, std::string_view bits,
                                  BuildStats* stats, WorkspaceTracker* workspace) {
  if (bits.size() != rls.n) {
    throw InputError("bit string length " + std::to_string(bits.size()) +
                     " does not match run-length n = " + std::to_string(rls.n));
  }
  const uint64_t n = rls.n;
  WitnessBuild out;
  out.max_table = CountTable{TableKind::kMaxOnes, std::vector<uint64_t>(n, 0)};
  out.min_table = CountTable{TableKind::kMinOnes, std::vector<uint64_t>(n, 0)};

  std::vector<uint64_t> dense_pmax(n, 0);
  std::vector<uint64_t> dense_pmin(n, 0);
  ScopedAllocation mem(workspace, 2 * n * sizeof(uint64_t));

  run_all_stages(rls, out.max_table.values, dense_pmax, stats);

  {
    const RunLengthString comp = complement(rls);
    ScopedAllocation comp_mem(workspace,
                              (comp.zero_runs.size() + comp.one_runs.size()) * sizeof(uint64_t));
    run_all_stages(comp, out.min_table.values, dense_pmin, stats);
  }
  // Complement side built max-zeros counts; flip them into min-ones.
  for (uint64_t idx = 0; idx < n; ++idx) {
    out.min_table.values[idx] = (idx + 1) - out.min_table.values[idx];
  }

  const uint32_t width = static_cast<uint32_t>(std::bit_width(n));
  out.tables.p_max = PackedIntVector(n, width);
  out.tables.p_min = PackedIntVector(n, width);
  for (uint64_t idx = 0; idx < n; ++idx) {
    out.tables.p_max.set(idx, dense_pmax[idx]);
    out.tables.p_min.set(idx, dense_pmin[idx]);
  }
  out.tables.source = RankBitvector(bits);
  return out;
}

}  // namespace bjpm
