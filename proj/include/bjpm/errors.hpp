#pragma once

#include <stdexcept>

namespace bjpm {

/// Malformed external input: non-binary characters, bad run-length text,
/// or a run-length string violating its invariants.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Serialized index with an unrecognized magic, version, or flag set.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serialized index that declares one shape but carries another:
/// truncated payloads or word counts disagreeing with the header.
class CorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Query requires data the index was built without.
class CapabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bjpm
