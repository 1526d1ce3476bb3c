#pragma once

#include <iosfwd>
#include <string>

#include "bjpm/index.hpp"

namespace bjpm {

/// Versioned binary index layout, all integers little-endian:
///
///   offset  size  field
///        0     4  magic "BJPM"
///        4     1  version (1)
///        5     1  flags (bit 0: witness section present)
///        6     6  reserved, must be zero
///       12     8  n
///       20     8  rho
///
/// followed by the max and min increment bitvectors and, when flagged, the
/// source bits plus the packed p_max / p_min position tables. Every
/// payload is a 64-bit word count followed by that many 64-bit words;
/// positions are packed at ceil(log2(n+1)) bits each. Rank directories are
/// not stored; they are rebuilt on load.
void save(const JumbledIndex& index, std::ostream& out);
JumbledIndex load(std::istream& in);

void save_file(const JumbledIndex& index, const std::string& path);
JumbledIndex load_file(const std::string& path);

}  // namespace bjpm
