#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>

namespace bjpm {

/// Running account of working memory, in bytes, with peak tracking.
/// Builders register transient structures only; inputs and returned
/// results stay out of the account.
class WorkspaceTracker {
 public:
  void add(uint64_t bytes) {
    current_ += bytes;
    peak_ = std::max(peak_, current_);
  }
  void remove(uint64_t bytes) {
    assert(bytes <= current_);
    current_ -= bytes;
  }

  uint64_t current_bytes() const { return current_; }
  uint64_t peak_bytes() const { return peak_; }
  uint64_t peak_bits() const { return peak_ * 8; }

 private:
  uint64_t current_ = 0;
  uint64_t peak_ = 0;
};

/// Keeps `bytes` registered with the tracker for the scope's lifetime.
class ScopedAllocation {
 public:
  ScopedAllocation(WorkspaceTracker* tracker, uint64_t bytes)
      : tracker_(tracker), bytes_(bytes) {
    if (tracker_) tracker_->add(bytes_);
  }
  ScopedAllocation(const ScopedAllocation&) = delete;
  ScopedAllocation& operator=(const ScopedAllocation&) = delete;
  ~ScopedAllocation() {
    if (tracker_) tracker_->remove(bytes_);
  }

 private:
  WorkspaceTracker* tracker_;
  uint64_t bytes_;
};

}  // namespace bjpm
