#pragma once

#include <cstdint>

#include "bjpm/rle.hpp"

namespace bjpm {

/// Reproducible random input with exactly `rho` one-runs over total length
/// `n`: every run and interior gap starts at length 1, then the leftover
/// length is spread over all 2*rho + 1 run slots with geometric draws.
/// Requires 2*rho <= n unless rho == 0.
RunLengthString generate_rls(uint64_t n, uint64_t rho, uint64_t seed);

}  // namespace bjpm
