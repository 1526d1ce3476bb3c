#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bjpm {

/// Run-length view of a binary string: zero-run lengths z[0..rho] and
/// one-run lengths o[1..rho]. The string is framed by possibly empty
/// boundary zero-runs; interior zero-runs are always at least 1.
/// rho == 0 encodes a string of all 0s (possibly empty).
struct RunLengthString {
  std::vector<uint64_t> zero_runs;  // rho + 1 entries
  std::vector<uint64_t> one_runs;   // rho entries, each >= 1
  uint64_t n = 0;

  uint64_t rho() const { return one_runs.size(); }

  friend bool operator==(const RunLengthString&, const RunLengthString&) = default;
};

/// Throws InputError unless `rls` satisfies the canonical invariants.
void validate(const RunLengthString& rls);

/// Canonical run-length form of a 0/1 string. Any other character raises
/// InputError naming its 1-based position.
RunLengthString encode(std::string_view bits);

/// Inverse of encode; validates `rls` first.
std::string decode(const RunLengthString& rls);

uint64_t total_ones(const RunLengthString& rls);
uint64_t total_zeros(const RunLengthString& rls);

/// Run-length form of the bitwise complement, re-canonicalized so the
/// invariants above keep holding (boundary runs may vanish or appear).
RunLengthString complement(const RunLengthString& rls);

/// One-line text form: alternating `0:<len>` / `1:<len>` tokens separated
/// by single spaces, starting and ending with a zero-run token (boundary
/// runs appear even when 0).
std::string format_rle_text(const RunLengthString& rls);
RunLengthString parse_rle_text(std::string_view line);

}  // namespace bjpm
