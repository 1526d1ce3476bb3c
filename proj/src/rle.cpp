#include "bjpm/rle.hpp"

#include <charconv>
#include <numeric>

#include "bjpm/errors.hpp"

namespace bjpm {

void validate(const RunLengthString& rls) {
  if (rls.zero_runs.size() != rls.one_runs.size() + 1) {
    throw InputError("run-length string needs exactly one more zero-run than one-runs");
  }
  uint64_t total = 0;
  for (size_t i = 0; i < rls.zero_runs.size(); ++i) {
    const bool boundary = i == 0 || i + 1 == rls.zero_runs.size();
    if (!boundary && rls.zero_runs[i] == 0) {
      throw InputError("interior zero-run of length 0 at index " + std::to_string(i));
    }
    total += rls.zero_runs[i];
  }
  for (size_t i = 0; i < rls.one_runs.size(); ++i) {
    if (rls.one_runs[i] == 0) {
      throw InputError("one-run of length 0 at index " + std::to_string(i + 1));
    }
    total += rls.one_runs[i];
  }
  if (total != rls.n) {
    throw InputError("run lengths sum to " + std::to_string(total) +
                     " but n = " + std::to_string(rls.n));
  }
}

RunLengthString encode(std::string_view bits) {
  RunLengthString out;
  out.n = bits.size();
  out.zero_runs.push_back(0);
  // zero_runs.size() == one_runs.size() + 1 means a zero-run is open,
  // equality means a one-run is open.
  for (size_t i = 0; i < bits.size(); ++i) {
    const char c = bits[i];
    if (c == '0') {
      if (out.zero_runs.size() == out.one_runs.size() + 1) {
        ++out.zero_runs.back();
      } else {
        out.zero_runs.push_back(1);
      }
    } else if (c == '1') {
      if (out.zero_runs.size() == out.one_runs.size() + 1) {
        out.one_runs.push_back(1);
      } else {
        ++out.one_runs.back();
      }
    } else {
      throw InputError(std::string("input is not binary: character '") + c +
                       "' at position " + std::to_string(i + 1));
    }
  }
  if (out.zero_runs.size() == out.one_runs.size()) {
    out.zero_runs.push_back(0);
  }
  return out;
}

std::string decode(const RunLengthString& rls) {
  validate(rls);
  std::string out;
  out.reserve(rls.n);
  for (size_t i = 0; i < rls.one_runs.size(); ++i) {
    out.append(rls.zero_runs[i], '0');
    out.append(rls.one_runs[i], '1');
  }
  out.append(rls.zero_runs.back(), '0');
  return out;
}

uint64_t total_ones(const RunLengthString& rls) {
  return std::accumulate(rls.one_runs.begin(), rls.one_runs.end(), uint64_t{0});
}

uint64_t total_zeros(const RunLengthString& rls) {
  return std::accumulate(rls.zero_runs.begin(), rls.zero_runs.end(), uint64_t{0});
}

RunLengthString complement(const RunLengthString& rls) {
  // Flipping turns the frame 0^z0 1^o1 ... 1^orho 0^zrho into
  // 1^z0 0^o1 ... 0^orho 1^zrho; empty boundary runs vanish and the
  // result is rebuilt in canonical form.
  RunLengthString out;
  out.n = rls.n;
  out.zero_runs.push_back(0);
  auto push = [&out](bool ones, uint64_t len) {
    if (len == 0) return;
    const bool zero_open = out.zero_runs.size() == out.one_runs.size() + 1;
    if (ones) {
      if (zero_open) {
        out.one_runs.push_back(len);
      } else {
        out.one_runs.back() += len;
      }
    } else {
      if (zero_open) {
        out.zero_runs.back() += len;
      } else {
        out.zero_runs.push_back(len);
      }
    }
  };
  push(true, rls.zero_runs[0]);
  for (size_t i = 0; i < rls.one_runs.size(); ++i) {
    push(false, rls.one_runs[i]);
    push(true, rls.zero_runs[i + 1]);
  }
  if (out.zero_runs.size() == out.one_runs.size()) {
    out.zero_runs.push_back(0);
  }
  return out;
}

std::string format_rle_text(const RunLengthString& rls) {
  std::string out;
  for (size_t i = 0; i < rls.one_runs.size(); ++i) {
    out += "0:" + std::to_string(rls.zero_runs[i]) + " ";
    out += "1:" + std::to_string(rls.one_runs[i]) + " ";
  }
  out += "0:" + std::to_string(rls.zero_runs.back());
  return out;
}

namespace {

uint64_t parse_run_token(std::string_view token, size_t index, char expected_char) {
  if (token.size() < 3 || token[1] != ':' || token[0] != expected_char) {
    throw InputError("run-length text: token " + std::to_string(index + 1) + " must look like '" +
                     expected_char + ":<len>', got '" + std::string(token) + "'");
  }
  uint64_t value = 0;
  const char* first = token.data() + 2;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw InputError("run-length text: bad length in token " + std::to_string(index + 1) + " ('" +
                     std::string(token) + "')");
  }
  return value;
}

}  // namespace

RunLengthString parse_rle_text(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t pos = 0;
  while (pos < line.size()) {
    size_t next = line.find(' ', pos);
    if (next == std::string_view::npos) next = line.size();
    if (next == pos) {
      throw InputError("run-length text: empty token (doubled or trailing space)");
    }
    tokens.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  if (tokens.empty() || tokens.size() % 2 == 0) {
    throw InputError("run-length text: expected an odd number of tokens starting and ending with '0:'");
  }
  RunLengthString out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    const bool is_zero = i % 2 == 0;
    const uint64_t len = parse_run_token(tokens[i], i, is_zero ? '0' : '1');
    if (is_zero) {
      out.zero_runs.push_back(len);
    } else {
      out.one_runs.push_back(len);
    }
  }
  out.n = total_ones(out) + total_zeros(out);
  validate(out);
  return out;
}

}  // namespace bjpm
