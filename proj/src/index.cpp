#include "bjpm/index.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "bjpm/compact_builder.hpp"
#include "bjpm/errors.hpp"
#include "bjpm/table_builder.hpp"

namespace bjpm {

JumbledIndex::JumbledIndex(uint64_t n, uint64_t rho, MonotoneBitvector min_bits,
                           MonotoneBitvector max_bits, std::optional<WitnessTables> witnesses)
    : n_(n),
      rho_(rho),
      min_(std::move(min_bits)),
      max_(std::move(max_bits)),
      witnesses_(std::move(witnesses)) {
  if (min_.size() != n_ || max_.size() != n_) {
    throw InputError("count bitvector length does not match n");
  }
  if (witnesses_ &&
      (witnesses_->source.size() != n_ || witnesses_->p_max.size() != n_ ||
       witnesses_->p_min.size() != n_)) {
    throw InputError("witness table length does not match n");
  }
}

bool JumbledIndex::exists(uint64_t zeros, uint64_t ones, QueryStats* stats) const {
  if (zeros == 0 && ones == 0) return true;
  if (zeros > n_ || ones > n_ || zeros + ones > n_) return false;
  const uint64_t k = zeros + ones;
  if (stats) stats->rank_calls += 2;
  return min_.value(k) <= ones && ones <= max_.value(k);
}

bool JumbledIndex::exists_with_length(uint64_t k, uint64_t ones, QueryStats* stats) const {
  if (ones > k) return false;
  return exists(k - ones, ones, stats);
}

uint64_t JumbledIndex::window_ones(uint64_t start, uint64_t k, QueryStats* stats) const {
  if (stats) stats->rank_calls += 2;
  return witnesses_->source.rank1(start + k - 1) - witnesses_->source.rank1(start - 1);
}

std::optional<uint64_t> JumbledIndex::witness(uint64_t zeros, uint64_t ones,
                                              QueryStats* stats) const {
  if (!witnesses_) {
    throw CapabilityError("index lacks witness tables; rebuild with witnessing enabled");
  }
  if (zeros == 0 && ones == 0) return std::nullopt;
  if (zeros > n_ || ones > n_ || zeros + ones > n_) return std::nullopt;
  const uint64_t k = zeros + ones;
  if (stats) stats->rank_calls += 2;
  const uint64_t min_count = min_.value(k);
  const uint64_t max_count = max_.value(k);
  if (ones < min_count || ones > max_count) return std::nullopt;
  const uint64_t min_pos = witnesses_->p_min.get(k - 1);
  const uint64_t max_pos = witnesses_->p_max.get(k - 1);
  if (ones == min_count) return min_pos;
  if (ones == max_count) return max_pos;
  // The stored starts carry counts that straddle the target, and sliding a
  // window one step changes its count by at most 1, so some start between
  // them hits the target exactly. Probe midpoints, keeping the half whose
  // end counts still straddle.
  uint64_t lo = min_pos, lo_count = min_count;
  uint64_t hi = max_pos, hi_count = max_count;
  if (lo > hi) {
    std::swap(lo, hi);
    std::swap(lo_count, hi_count);
  }
  while (hi - lo >= 2) {
    const uint64_t mid = lo + (hi - lo) / 2;
    const uint64_t mid_count = window_ones(mid, k, stats);
    if (mid_count == ones) return mid;
    if ((lo_count < ones) != (mid_count < ones)) {
      hi = mid;
      hi_count = mid_count;
    } else {
      lo = mid;
      lo_count = mid_count;
    }
  }
  // Adjacent starts differ by at most one 1, so a strict straddle cannot
  // narrow to width one.
  throw std::logic_error("witness search failed to converge");
}

std::pair<uint64_t, uint64_t> JumbledIndex::range_of_ones(uint64_t k, QueryStats* stats) const {
  if (k < 1 || k > n_) {
    throw std::out_of_range("length " + std::to_string(k) + " outside 1.." + std::to_string(n_));
  }
  if (stats) stats->rank_calls += 2;
  return {min_.value(k), max_.value(k)};
}

namespace {

JumbledIndex build_impl(const RunLengthString& rls, std::optional<std::string_view> bits,
                        const BuildOptions& options, IndexBuildInfo* info) {
  validate(rls);
  const auto started = std::chrono::steady_clock::now();
  WorkspaceTracker workspace;
  BuildStats stats;
  MonotoneBitvector min_bv;
  MonotoneBitvector max_bv;
  std::optional<WitnessTables> witnesses;

  if (options.witness) {
    if (options.compact) {
      throw InputError("compact construction does not support witnessing");
    }
    std::string decoded;
    std::string_view source;
    uint64_t decoded_bytes = 0;
    if (bits) {
      source = *bits;
    } else {
      decoded = decode(rls);
      source = decoded;
      decoded_bytes = decoded.size();
    }
    ScopedAllocation decode_mem(&workspace, decoded_bytes);
    WitnessBuild wb = build_witness_tables(rls, source, &stats, &workspace);
    {
      ScopedAllocation dense(&workspace, 2 * rls.n * sizeof(uint64_t));
      max_bv = delta_encode(wb.max_table);
      min_bv = delta_encode(wb.min_table);
    }
    witnesses = std::move(wb.tables);
  } else if (options.compact) {
    const CompactOptions copts{options.block_size, options.word_updates};
    max_bv = build_max_table_compact(rls, copts, &stats, &workspace);
    min_bv = build_min_table_compact(rls, copts, &stats, &workspace);
  } else {
    {
      ScopedAllocation dense(&workspace, rls.n * sizeof(uint64_t));
      max_bv = delta_encode(build_max_table(rls, &stats, &workspace));
    }
    {
      ScopedAllocation dense(&workspace, rls.n * sizeof(uint64_t));
      min_bv = delta_encode(build_min_table(rls, &stats, &workspace));
    }
  }

  JumbledIndex index(rls.n, rls.rho(), std::move(min_bv), std::move(max_bv),
                     std::move(witnesses));
  if (info) {
    info->n = rls.n;
    info->rho = rls.rho();
    info->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    info->stage1_pairs = stats.stage1_pairs;
    info->workspace_bits = workspace.peak_bits();
  }
  return index;
}

}  // namespace

JumbledIndex build_index(const RunLengthString& rls, const BuildOptions& options,
                         IndexBuildInfo* info) {
  return build_impl(rls, std::nullopt, options, info);
}

JumbledIndex build_index(std::string_view bits, const BuildOptions& options,
                         IndexBuildInfo* info) {
  return build_impl(encode(bits), bits, options, info);
}

}  // namespace bjpm
