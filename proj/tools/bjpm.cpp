// Command-line front end: build, query, verify, and benchmark index files.
//
// Exit codes: 0 success ("yes" for query), 1 negative result ("no" for
// query, mismatch for verify), 2 usage or runtime error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bjpm/compact_builder.hpp"
#include "bjpm/errors.hpp"
#include "bjpm/generator.hpp"
#include "bjpm/index.hpp"
#include "bjpm/index_io.hpp"
#include "bjpm/oracle.hpp"
#include "bjpm/table_builder.hpp"

namespace {

struct InputSpec {
  std::string path = "-";
  bool as_bits = false;
  bool as_rle = false;
};

void add_input_options(CLI::App* cmd, InputSpec& spec) {
  cmd->add_option("input", spec.path, "input path ('-' reads stdin)");
  cmd->add_flag("--bits", spec.as_bits, "input is a raw 0/1 string");
  cmd->add_flag("--rle", spec.as_rle, "input is run-length text (0:<len> 1:<len> ... 0:<len>)");
}

std::string read_all(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::string trim(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

// The format flag is mandatory: a run-length line is also a valid-looking
// byte stream, so guessing would misread inputs silently.
bjpm::RunLengthString read_input(const InputSpec& spec, std::string* bits_out) {
  if (spec.as_bits == spec.as_rle) {
    throw bjpm::InputError("exactly one of --bits or --rle is required");
  }
  const std::string text = trim(read_all(spec.path));
  if (spec.as_bits) {
    if (bits_out) *bits_out = text;
    return bjpm::encode(text);
  }
  bjpm::RunLengthString rls = text.empty() ? bjpm::encode("") : bjpm::parse_rle_text(text);
  if (bits_out) *bits_out = bjpm::decode(rls);
  return rls;
}

int cmd_build(const InputSpec& input, const std::string& output, bool witness, bool compact) {
  std::string bits;
  const bjpm::RunLengthString rls = read_input(input, witness ? &bits : nullptr);
  bjpm::BuildOptions options;
  options.witness = witness;
  options.compact = compact;
  bjpm::IndexBuildInfo info;
  const bjpm::JumbledIndex index = witness ? bjpm::build_index(bits, options, &info)
                                           : bjpm::build_index(rls, options, &info);
  bjpm::save_file(index, output);
  std::cerr << "n=" << info.n << " rho=" << info.rho << " build_s=" << info.seconds;
  if (compact) std::cerr << " workspace_bits=" << info.workspace_bits;
  std::cerr << '\n';
  return 0;
}

int cmd_query(const std::string& index_path, uint64_t zeros, uint64_t ones, bool want_witness) {
  const bjpm::JumbledIndex index = bjpm::load_file(index_path);
  if (want_witness) {
    const auto position = index.witness(zeros, ones);
    if (position) {
      std::cout << "yes " << *position << '\n';
      return 0;
    }
    if (index.exists(zeros, ones)) {
      std::cout << "yes\n";  // the empty substring has no position
      return 0;
    }
    std::cout << "no\n";
    return 1;
  }
  if (index.exists(zeros, ones)) {
    std::cout << "yes\n";
    return 0;
  }
  std::cout << "no\n";
  return 1;
}

int cmd_verify(const InputSpec& input, uint64_t max_n) {
  std::string bits;
  const bjpm::RunLengthString rls = read_input(input, &bits);
  const uint64_t n = rls.n;
  if (n > max_n) {
    throw std::runtime_error("input too large for the verification budget (n=" +
                             std::to_string(n) + ", --max-n=" + std::to_string(max_n) + ")");
  }

  if (bjpm::encode(bits) != rls || bjpm::decode(rls) != bits) {
    std::cerr << "mismatch: run-length round trip\n";
    return 1;
  }
  std::cout << "check rle-roundtrip: ok\n";

  const bjpm::CountTable max_table = bjpm::build_max_table(rls);
  const bjpm::CountTable min_table = bjpm::build_min_table(rls);
  for (uint64_t k = 1; k <= n; ++k) {
    const auto [lo, hi] = bjpm::oracle::brute_minmax(bits, k);
    if (max_table.at(k) != hi) {
      std::cerr << "mismatch at k=" << k << ": max table says " << max_table.at(k)
                << ", oracle counted " << hi << '\n';
      return 1;
    }
    if (min_table.at(k) != lo) {
      std::cerr << "mismatch at k=" << k << ": min table says " << min_table.at(k)
                << ", oracle counted " << lo << '\n';
      return 1;
    }
  }
  std::cout << "check count-tables: ok\n";

  const bjpm::CountTable quadratic = bjpm::oracle::build_max_table_quadratic(rls);
  for (uint64_t k = 1; k <= n; ++k) {
    if (quadratic.at(k) != max_table.at(k)) {
      std::cerr << "mismatch at k=" << k << ": run-pair builder says " << max_table.at(k)
                << ", position-pair builder says " << quadratic.at(k) << '\n';
      return 1;
    }
  }
  std::cout << "check quadratic-builder: ok\n";

  const bjpm::MonotoneBitvector plain_max = bjpm::delta_encode(max_table);
  const bjpm::MonotoneBitvector plain_min = bjpm::delta_encode(min_table);
  if (bjpm::build_max_table_compact(rls) != plain_max ||
      bjpm::build_min_table_compact(rls) != plain_min) {
    std::cerr << "mismatch: compact construction differs from the plain tables\n";
    return 1;
  }
  std::cout << "check compact-builder: ok\n";

  const bjpm::JumbledIndex index = bjpm::build_index(bits, bjpm::BuildOptions{.witness = true});
  std::vector<uint64_t> prefix(n + 1, 0);
  for (uint64_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + (bits[i] == '1');
  for (uint64_t k = 1; k <= n; ++k) {
    const auto profile = bjpm::oracle::window_count_profile(bits, k);
    for (uint64_t ones = 0; ones <= k; ++ones) {
      const bool want = profile[ones] != 0;
      if (index.exists(k - ones, ones) != want) {
        std::cerr << "mismatch at k=" << k << ", ones=" << ones << ": index says "
                  << (want ? "absent" : "present") << ", oracle disagrees\n";
        return 1;
      }
      const auto position = index.witness(k - ones, ones);
      if (position.has_value() != want) {
        std::cerr << "mismatch at k=" << k << ", ones=" << ones << ": witness "
                  << (want ? "missing" : "unexpected") << '\n';
        return 1;
      }
      if (position && prefix[*position + k - 1] - prefix[*position - 1] != ones) {
        std::cerr << "mismatch at k=" << k << ", ones=" << ones << ": witness at " << *position
                  << " recounts to " << prefix[*position + k - 1] - prefix[*position - 1] << '\n';
        return 1;
      }
    }
  }
  std::cout << "check queries-and-witnesses: ok\n";

  std::cout << "all checks passed (n=" << n << ", rho=" << rls.rho() << ")\n";
  return 0;
}

int cmd_bench(const std::vector<uint64_t>& sizes, const std::vector<uint64_t>& rhos,
              uint64_t seed, const std::string& mode) {
  bjpm::BuildOptions options;
  options.witness = mode == "witness";
  options.compact = mode == "compact";
  if (options.compact) {
    std::cerr << "block update path: word operations\n";
  }
  constexpr int kRepetitions = 3;
  constexpr uint64_t kQueries = 200000;
  std::cout << "mode,n,rho,build_s,workspace_bits,qps\n";
  for (const uint64_t n : sizes) {
    for (const uint64_t rho : rhos) {
      const bjpm::RunLengthString rls = bjpm::generate_rls(n, rho, seed);
      bjpm::IndexBuildInfo info;
      double best = 0;
      for (int rep = 0; rep < kRepetitions; ++rep) {
        bjpm::IndexBuildInfo attempt;
        bjpm::build_index(rls, options, &attempt);
        if (rep == 0 || attempt.seconds < best) best = attempt.seconds;
        info = attempt;
      }
      const bjpm::JumbledIndex index = bjpm::build_index(rls, options);
      std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
      std::vector<std::pair<uint64_t, uint64_t>> queries(kQueries);
      for (auto& q : queries) {
        const uint64_t k = n == 0 ? 0 : rng() % (n + 1);
        const uint64_t ones = k == 0 ? 0 : rng() % (k + 1);
        q = {k - ones, ones};
      }
      uint64_t positive = 0;
      const auto started = std::chrono::steady_clock::now();
      for (const auto& [zeros, ones] : queries) {
        positive += index.exists(zeros, ones);
      }
      const double query_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      std::cerr << "positive_queries=" << positive << '\n';
      std::cout << mode << ',' << n << ',' << rho << ',' << best << ',' << info.workspace_bits
                << ',' << static_cast<uint64_t>(kQueries / query_seconds) << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"index builder and query tool for substring 0/1-count matching"};
  app.require_subcommand(1);

  InputSpec build_input;
  std::string build_output;
  bool build_witness = false;
  bool build_compact = false;
  auto* build = app.add_subcommand("build", "build an index file");
  add_input_options(build, build_input);
  build->add_flag("--witness", build_witness, "record witness positions");
  build->add_flag("--compact", build_compact, "construct the tables in O(n)-bit workspace");
  build->add_option("-o,--output", build_output, "index file to write")->required();

  std::string query_index;
  uint64_t query_zeros = 0;
  uint64_t query_ones = 0;
  bool query_witness = false;
  auto* query = app.add_subcommand("query", "ask whether a substring with the given counts exists");
  query->add_option("index", query_index, "index file")->required();
  query->add_option("zeros", query_zeros, "number of 0s")->required();
  query->add_option("ones", query_ones, "number of 1s")->required();
  query->add_flag("--witness", query_witness, "also print a matching position");

  InputSpec verify_input;
  uint64_t verify_max_n = 4096;
  auto* verify = app.add_subcommand("verify", "cross-check every implementation on one input");
  add_input_options(verify, verify_input);
  verify->add_option("--max-n", verify_max_n, "refuse inputs longer than this");

  std::vector<uint64_t> bench_sizes{1 << 20};
  std::vector<uint64_t> bench_rhos{64};
  uint64_t bench_seed = 1;
  std::string bench_mode = "plain";
  auto* bench = app.add_subcommand("bench", "time index construction and queries, emitting CSV");
  bench->add_option("--n", bench_sizes, "input lengths");
  bench->add_option("--rho", bench_rhos, "one-run counts");
  bench->add_option("--seed", bench_seed, "generator seed");
  bench->add_option("--mode", bench_mode, "plain, compact, or witness")
      ->check(CLI::IsMember({"plain", "compact", "witness"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) return cmd_build(build_input, build_output, build_witness, build_compact);
    if (query->parsed()) return cmd_query(query_index, query_zeros, query_ones, query_witness);
    if (verify->parsed()) return cmd_verify(verify_input, verify_max_n);
    return cmd_bench(bench_sizes, bench_rhos, bench_seed, bench_mode);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
