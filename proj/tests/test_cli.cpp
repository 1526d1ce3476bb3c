#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "helpers.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

class TempDir {
 public:
  TempDir() {
    dir_ = fs::temp_directory_path() / ("bjpm_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  fs::path path(const std::string& name) const { return dir_ / name; }

 private:
  fs::path dir_;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

RunResult run_cli(const TempDir& dir, const std::string& args, const std::string& input = "") {
  const fs::path in_path = dir.path("stdin.txt");
  const fs::path out_path = dir.path("stdout.txt");
  const fs::path err_path = dir.path("stderr.txt");
  write_file(in_path, input);
  const std::string command = std::string(BJPM_CLI_PATH) + " " + args + " < " +
                              in_path.string() + " > " + out_path.string() + " 2> " +
                              err_path.string();
  const int raw = std::system(command.c_str());
  RunResult result;
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  return result;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("build and query the reference string") {
  TempDir dir;
  const std::string index = dir.path("ref.bjpm").string();

  const RunResult build =
      run_cli(dir, "build --bits --witness -o " + index, std::string(test_support::kRef) + "\n");
  REQUIRE(build.status == 0);
  CHECK(build.err.find("n=12 rho=4") != std::string::npos);

  CHECK(run_cli(dir, "query " + index + " 2 3").out == "yes\n");
  CHECK(run_cli(dir, "query " + index + " 2 3").status == 0);
  CHECK(run_cli(dir, "query " + index + " 2 3 --witness").out == "yes 2\n");
  CHECK(run_cli(dir, "query " + index + " 4 1").out == "no\n");
  CHECK(run_cli(dir, "query " + index + " 4 1").status == 1);
  CHECK(run_cli(dir, "query " + index + " 0 0").out == "yes\n");
  CHECK(run_cli(dir, "query " + index + " 0 0 --witness").out == "yes\n");
}

TEST_CASE("run-length input") {
  TempDir dir;
  const std::string index = dir.path("rle.bjpm").string();
  const RunResult build =
      run_cli(dir, "build --rle -o " + index, "0:1 1:1 0:1 1:1 0:1 1:3 0:2 1:2 0:0\n");
  REQUIRE(build.status == 0);
  CHECK(run_cli(dir, "query " + index + " 2 3").out == "yes\n");
  CHECK(run_cli(dir, "query " + index + " 4 1").status == 1);
}

TEST_CASE("empty input builds a working index") {
  TempDir dir;
  const std::string index = dir.path("empty.bjpm").string();
  REQUIRE(run_cli(dir, "build --bits -o " + index, "").status == 0);
  CHECK(run_cli(dir, "query " + index + " 0 0").out == "yes\n");
  CHECK(run_cli(dir, "query " + index + " 0 1").status == 1);
}

TEST_CASE("error paths exit with 2") {
  TempDir dir;
  const std::string index = dir.path("plain.bjpm").string();
  REQUIRE(run_cli(dir, "build --bits -o " + index, "0101").status == 0);

  // format flag is mandatory
  CHECK(run_cli(dir, "build -o " + dir.path("x.bjpm").string(), "0101").status == 2);
  CHECK(run_cli(dir, "build --bits --rle -o " + dir.path("x.bjpm").string(), "0101").status == 2);
  // witness query against a plain index
  const RunResult witness = run_cli(dir, "query " + index + " 1 1 --witness");
  CHECK(witness.status == 2);
  CHECK(witness.err.find("witness") != std::string::npos);
  // broken input and missing files
  CHECK(run_cli(dir, "build --bits -o " + dir.path("x.bjpm").string(), "01021").status == 2);
  CHECK(run_cli(dir, "query " + dir.path("missing.bjpm").string() + " 1 1").status == 2);
  CHECK(run_cli(dir, "query " + index).status == 2);
}

TEST_CASE("compact build writes byte-identical files") {
  TempDir dir;
  std::mt19937_64 rng(91);
  const std::string bits = test_support::random_bits(rng, 3000);
  const std::string plain = dir.path("plain.bjpm").string();
  const std::string compact = dir.path("compact.bjpm").string();
  REQUIRE(run_cli(dir, "build --bits -o " + plain, bits).status == 0);
  const RunResult build = run_cli(dir, "build --bits --compact -o " + compact, bits);
  REQUIRE(build.status == 0);
  CHECK(build.err.find("workspace_bits=") != std::string::npos);
  CHECK(read_file(plain) == read_file(compact));
  CHECK(run_cli(dir, "build --bits --compact --witness -o " + compact, bits).status == 2);
}

TEST_CASE("verify passes on the reference string") {
  TempDir dir;
  const RunResult result = run_cli(dir, "verify --bits", std::string(test_support::kRef));
  REQUIRE(result.status == 0);
  CHECK(result.out.find("all checks passed (n=12, rho=4)") != std::string::npos);
  CHECK(run_cli(dir, "verify --bits", "").status == 0);
  CHECK(run_cli(dir, "verify --bits --max-n 4", "010101").status == 2);
}

TEST_CASE("bench emits one CSV row per configuration") {
  TempDir dir;
  const RunResult result = run_cli(dir, "bench --n 1024 --rho 4 --seed 7 --mode plain");
  REQUIRE(result.status == 0);
  std::istringstream rows(result.out);
  std::string header, row;
  REQUIRE(std::getline(rows, header));
  REQUIRE(std::getline(rows, row));
  CHECK(header == "mode,n,rho,build_s,workspace_bits,qps");
  CHECK(row.rfind("plain,1024,4,", 0) == 0);

  const RunResult compact = run_cli(dir, "bench --n 512 --rho 2 --mode compact");
  REQUIRE(compact.status == 0);
  CHECK(compact.err.find("block update path: word operations") != std::string::npos);
  CHECK(run_cli(dir, "bench --n 8 --rho 7").status == 2);  // 2*rho > n
}

}  // TEST_SUITE
