#include "bjpm/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bjpm/errors.hpp"

namespace bjpm {

namespace {

// Raw-engine draws keep runs reproducible across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

uint64_t sample_geometric(std::mt19937_64& rng, double p) {
  if (p >= 1.0) return 0;
  const double u = unit_uniform(rng);
  return static_cast<uint64_t>(std::log1p(-u) / std::log1p(-p));
}

}  // namespace

RunLengthString generate_rls(uint64_t n, uint64_t rho, uint64_t seed) {
  if (rho > 0 && 2 * rho > n) {
    throw InputError("generator needs 2*rho <= n so every run and gap fits");
  }
  RunLengthString out;
  out.n = n;
  if (rho == 0) {
    out.zero_runs = {n};
    return out;
  }
  out.one_runs.assign(rho, 1);
  out.zero_runs.assign(rho + 1, 1);
  out.zero_runs.front() = 0;
  out.zero_runs.back() = 0;
  uint64_t leftover = n - (2 * rho - 1);
  std::mt19937_64 rng(seed);
  const uint64_t slots = 2 * rho + 1;
  const double p = static_cast<double>(slots) / static_cast<double>(slots + leftover);
  for (uint64_t s = 0; s < slots && leftover > 0; ++s) {
    const uint64_t extra = std::min(sample_geometric(rng, p), leftover);
    leftover -= extra;
    if (s % 2 == 0) {
      out.zero_runs[s / 2] += extra;
    } else {
      out.one_runs[s / 2] += extra;
    }
  }
  out.zero_runs.back() += leftover;
  return out;
}

}  // namespace bjpm
