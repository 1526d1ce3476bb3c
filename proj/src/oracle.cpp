#include "bjpm/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bjpm::oracle {

namespace {

void check_window_length(std::string_view bits, uint64_t k) {
  if (k < 1 || k > bits.size()) {
    throw std::out_of_range("window length " + std::to_string(k) + " outside 1.." +
                            std::to_string(bits.size()));
  }
}

}  // namespace

std::pair<uint64_t, uint64_t> brute_minmax(std::string_view bits, uint64_t k) {
  check_window_length(bits, k);
  uint64_t count = 0;
  for (uint64_t i = 0; i < k; ++i) count += bits[i] == '1';
  uint64_t lo = count, hi = count;
  for (uint64_t i = k; i < bits.size(); ++i) {
    count += bits[i] == '1';
    count -= bits[i - k] == '1';
    lo = std::min(lo, count);
    hi = std::max(hi, count);
  }
  return {lo, hi};
}

bool brute_exists(std::string_view bits, uint64_t zeros, uint64_t ones) {
  return zeros == 0 && ones == 0 ? true : brute_witness(bits, zeros, ones).has_value();
}

std::optional<uint64_t> brute_witness(std::string_view bits, uint64_t zeros, uint64_t ones) {
  const uint64_t n = bits.size();
  if (zeros == 0 && ones == 0) return std::nullopt;
  if (zeros > n || ones > n || zeros + ones > n) return std::nullopt;
  const uint64_t k = zeros + ones;
  uint64_t count = 0;
  for (uint64_t i = 0; i < k; ++i) count += bits[i] == '1';
  if (count == ones) return 1;
  for (uint64_t i = k; i < n; ++i) {
    count += bits[i] == '1';
    count -= bits[i - k] == '1';
    if (count == ones) return i - k + 2;
  }
  return std::nullopt;
}

std::vector<uint8_t> window_count_profile(std::string_view bits, uint64_t k) {
  check_window_length(bits, k);
  std::vector<uint8_t> flags(k + 1, 0);
  uint64_t count = 0;
  for (uint64_t i = 0; i < k; ++i) count += bits[i] == '1';
  flags[count] = 1;
  for (uint64_t i = k; i < bits.size(); ++i) {
    count += bits[i] == '1';
    count -= bits[i - k] == '1';
    flags[count] = 1;
  }
  return flags;
}

CountTable build_max_table_quadratic(const RunLengthString& rls) {
  const uint64_t n = rls.n;
  const uint64_t rho = rls.rho();
  CountTable out{TableKind::kMaxOnes, std::vector<uint64_t>(n, 0)};
  std::vector<uint64_t> run_start(rho), run_end(rho), ones_before(rho + 1, 0);
  uint64_t pos = 1;
  for (uint64_t i = 0; i < rho; ++i) {
    pos += rls.zero_runs[i];
    run_start[i] = pos;
    pos += rls.one_runs[i];
    run_end[i] = pos - 1;
    ones_before[i + 1] = ones_before[i] + rls.one_runs[i];
  }
  auto& table = out.values;
  for (uint64_t a = 0; a < rho; ++a) {
    for (uint64_t b = a; b < rho; ++b) {
      for (uint64_t j = run_start[b]; j <= run_end[b]; ++j) {
        const uint64_t len = j - run_start[a] + 1;
        const uint64_t count = ones_before[b] - ones_before[a] + (j - run_start[b] + 1);
        table[len - 1] = std::max(table[len - 1], count);
      }
    }
  }
  for (uint64_t idx = 1; idx < n; ++idx) table[idx] = std::max(table[idx], table[idx - 1]);
  return out;
}

}  // namespace bjpm::oracle
