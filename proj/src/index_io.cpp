#include "bjpm/index_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "bjpm/errors.hpp"
#include "bjpm/packed_ints.hpp"

namespace bjpm {

namespace {

constexpr char kMagic[4] = {'B', 'J', 'P', 'M'};
constexpr uint8_t kVersion = 1;
constexpr uint8_t kFlagWitness = 0x01;

void write_u64(std::ostream& out, uint64_t v) {
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(bytes, 8);
}

uint64_t read_u64(std::istream& in, const char* what) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) {
    throw CorruptionError(std::string("truncated index file while reading ") + what);
  }
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(bytes[i]) << (8 * i);
  return v;
}

void write_payload(std::ostream& out, std::span<const uint64_t> words) {
  write_u64(out, words.size());
  for (uint64_t w : words) write_u64(out, w);
}

std::vector<uint64_t> read_payload(std::istream& in, uint64_t expected_words, const char* what) {
  const uint64_t count = read_u64(in, what);
  if (count != expected_words) {
    throw CorruptionError(std::string(what) + ": payload holds " + std::to_string(count) +
                          " words but the header implies " + std::to_string(expected_words));
  }
  std::vector<uint64_t> words(count);
  for (uint64_t i = 0; i < count; ++i) words[i] = read_u64(in, what);
  return words;
}

}  // namespace

void save(const JumbledIndex& index, std::ostream& out) {
  out.write(kMagic, 4);
  const char version_and_flags[2] = {
      static_cast<char>(kVersion),
      static_cast<char>(index.has_witnesses() ? kFlagWitness : 0)};
  out.write(version_and_flags, 2);
  const char reserved[6] = {};
  out.write(reserved, 6);
  write_u64(out, index.size());
  write_u64(out, index.rho());
  write_payload(out, index.max_bits().bits().words());
  write_payload(out, index.min_bits().bits().words());
  if (index.has_witnesses()) {
    const WitnessTables& wt = *index.witnesses();
    write_payload(out, wt.source.words());
    write_payload(out, wt.p_max.words());
    write_payload(out, wt.p_min.words());
  }
  if (!out) {
    throw std::runtime_error("index write failed");
  }
}

JumbledIndex load(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    throw FormatError("not an index file (bad magic)");
  }
  unsigned char head[8];
  if (!in.read(reinterpret_cast<char*>(head), 8)) {
    throw CorruptionError("truncated index header");
  }
  if (head[0] != kVersion) {
    throw FormatError("unsupported index version " + std::to_string(head[0]));
  }
  const uint8_t flags = head[1];
  if (flags & ~kFlagWitness) {
    throw FormatError("unknown flag bits 0x" + std::to_string(flags));
  }
  for (int i = 2; i < 8; ++i) {
    if (head[i] != 0) throw FormatError("reserved header bytes are not zero");
  }
  const uint64_t n = read_u64(in, "n");
  const uint64_t rho = read_u64(in, "rho");
  if (rho > n) {
    throw CorruptionError("header claims more one-runs than characters");
  }
  const uint64_t bv_words = (n + 63) / 64;
  MonotoneBitvector max_bv(RankBitvector(read_payload(in, bv_words, "max table"), n));
  MonotoneBitvector min_bv(RankBitvector(read_payload(in, bv_words, "min table"), n));
  std::optional<WitnessTables> witnesses;
  if (flags & kFlagWitness) {
    WitnessTables wt;
    wt.source = RankBitvector(read_payload(in, bv_words, "source bits"), n);
    const uint32_t width = static_cast<uint32_t>(std::bit_width(n));
    const uint64_t p_words = PackedIntVector::words_needed(n, width);
    wt.p_max = PackedIntVector::from_words(read_payload(in, p_words, "max positions"), n, width);
    wt.p_min = PackedIntVector::from_words(read_payload(in, p_words, "min positions"), n, width);
    witnesses = std::move(wt);
  }
  return JumbledIndex(n, rho, std::move(min_bv), std::move(max_bv), std::move(witnesses));
}

void save_file(const JumbledIndex& index, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  save(index, out);
}

JumbledIndex load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return load(in);
}

}  // namespace bjpm
