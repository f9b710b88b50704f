// Golden-file tests for the command-line tool. Each case runs the binary from
// the golden directory and compares exit status and combined output with
// <name>.out. Set CONJGEN_UPDATE_GOLDEN=1 to rewrite the expected files.
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int status;
  std::string output;
};

Run run(const std::string& args) {
  const std::string cmd = "cd '" GOLDEN_DIR "' && '" CONJGEN_CLI "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void golden(const std::string& name, const std::string& args, int status) {
  CAPTURE(args);
  const Run r = run(args);
  CHECK(r.status == status);
  const std::filesystem::path path = std::filesystem::path(GOLDEN_DIR) / (name + ".out");
  if (const char* up = std::getenv("CONJGEN_UPDATE_GOLDEN"); up && std::string(up) == "1") {
    std::ofstream(path) << r.output;
    return;
  }
  REQUIRE_MESSAGE(std::filesystem::exists(path), "missing golden file " << path);
  CHECK(r.output == read_file(path));
  // identical inputs and seed give byte-identical output
  CHECK(run(args).output == r.output);
}

}  // namespace

TEST_CASE("construct") {
  golden("construct_cycle_tree", "construct --type 4 --n 10", 0);
  golden("construct_basic_tree", "construct --type 2,2,2 --n 22", 0);
  golden("construct_extended", "construct --type 2,2,2 --n 26 --seed 7", 0);
  golden("construct_general", "construct --type 2,2,4 --n 36", 0);
  golden("construct_parity", "construct --type 3 --n 10", 1);
  golden("construct_too_small", "construct --type 2,2,2 --n 21", 1);
  golden("construct_bad_type", "construct --type 1,2 --n 10", 1);
}

TEST_CASE("construct writes the same text to a file") {
  const auto tmp = std::filesystem::temp_directory_path() / "conjgen_cli_construct.txt";
  const Run r = run("construct --type 4 --n 10 -o '" + tmp.string() + "'");
  CHECK(r.status == 0);
  CHECK(r.output.empty());
  CHECK(read_file(tmp) == run("construct --type 4 --n 10").output);
  std::filesystem::remove(tmp);
}

TEST_CASE("verify") {
  golden("verify_basic_k3", "verify basic_k3.txt", 0);
  golden("verify_path5", "verify path5.txt", 0);
  golden("verify_empty", "verify empty.txt", 2);
  golden("verify_mixed", "verify mixed.txt", 1);
  golden("verify_missing", "verify no_such_file.txt", 1);
}

TEST_CASE("cayley") {
  golden("cayley_s3", "cayley s3.txt", 0);
  golden("cayley_s3_dot", "cayley s3.txt --format dot", 0);
  golden("cayley_cap", "cayley path5.txt --cap 50", 1);
}

TEST_CASE("aut") {
  golden("aut_path5", "aut path5.txt", 0);
  golden("aut_petersen", "aut --graph petersen.el", 0);
  golden("aut_budget", "aut path5.txt --budget 100", 1);
  golden("aut_no_input", "aut", 1);
}

TEST_CASE("qh") {
  golden("qh_petersen", "qh --graph petersen.el --check-hamiltonian", 0);
  golden("qh_c6", "qh --graph c6.el --k 4 --check-hamiltonian", 0);
  golden("qh_bad_graph", "qh --graph bad.el --k 1", 1);
}

TEST_CASE("spectrum") {
  golden("spectrum_c6", "spectrum --graph c6.el --k 6", 0);
  golden("spectrum_pair4", "spectrum pair4.txt --k 3 --cap 6000", 0);
  golden("spectrum_laplacian", "spectrum --graph petersen.el --kind laplacian --k 3", 0);
  golden("spectrum_bad_kind", "spectrum --graph c6.el --kind other", 1);
}

TEST_CASE("prime") {
  golden("prime_4", "prime --m 4", 0);
  golden("prime_6", "prime --m 6 --seed 3", 0);
  golden("prime_bad", "prime --m 1", 1);
}

TEST_CASE("usage") {
  golden("usage_none", "", 1);
  CHECK(run("--help").status == 0);
  for (const char* sub : {"construct", "verify", "cayley", "aut", "qh", "spectrum", "prime"}) {
    const Run r = run(std::string(sub) + " --help");
    CHECK(r.status == 0);
    CHECK(r.output.find("Usage") != std::string::npos);
  }
}
