#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "rga/experiment.hpp"
#include "rga/graph.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

std::string temp_path(const std::string& suffix) {
  static int counter = 0;
  return "/tmp/rga_cli_test_" + std::to_string(getpid()) + "_" +
         std::to_string(counter++) + suffix;
}

// Runs the CLI binary, capturing stdout+stderr.
RunResult run_cli(const std::string& args) {
  const std::string out_path = temp_path(".cliout");
  const std::string cmd = std::string(RGA_CLI_PATH) + " " + args + " > " +
                          out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::remove(out_path.c_str());
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, ss.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli gen writes the deterministic edge list") {
  const auto r = run_cli("gen --n 4 --p 0.5 --seed 1");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output == "4 2\n1 2\n1 3\n");
}

TEST_CASE("cli mis runs all three algorithms consistently") {
  const auto branch = run_cli("mis --n 12 --p 0.5 --seed 7 --algo branch");
  const auto brute = run_cli("mis --n 12 --p 0.5 --seed 7 --algo brute");
  const auto oracle = run_cli("mis --n 12 --p 0.5 --seed 7 --algo oracle");
  REQUIRE(branch.exit_code == 0);
  REQUIRE(brute.exit_code == 0);
  REQUIRE(oracle.exit_code == 0);
  const std::string size_line = branch.output.substr(0, branch.output.find('\n'));
  REQUIRE(brute.output.substr(0, brute.output.find('\n')) == size_line);
  REQUIRE(oracle.output.substr(0, oracle.output.find('\n')) == size_line);
}

TEST_CASE("cli reads edge-list input files") {
  const std::string path = temp_path(".edges");
  std::ofstream(path) << "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
  const auto r = run_cli("mis --input " + path + " --algo brute");
  std::remove(path.c_str());
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("size 2") == 0);
  REQUIRE(r.output.find("set 0 2") != std::string::npos);
}

TEST_CASE("cli decide") {
  const auto r = run_cli("decide --n 5 --p 0.5 --seed 1 --k 2");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("answer ") == 0);
  REQUIRE(r.output.find("path ") != std::string::npos);
}

TEST_CASE("cli lcs") {
  const auto r = run_cli("lcs --n 5 --p 0.5 --seed 11 --m 5 --q 0.5 --seed2 11");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("size 5") == 0);
}

TEST_CASE("cli approx") {
  const auto r = run_cli("approx --n 16 --p 0.5 --seed 5");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("blocks 4") != std::string::npos);
  REQUIRE(r.output.find("block_size 4") != std::string::npos);
}

TEST_CASE("cli mc") {
  const auto r = run_cli("mc --check iso --k 4 --p 0.5 --q 0.5 --trials 500 --seed 3");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.output.find("predicted 0.015625") != std::string::npos);
}

TEST_CASE("cli sweep emits parseable csv") {
  const std::string path = temp_path(".csv");
  const auto r = run_cli("sweep --n 8 --p 0.5 --seed 1 --seed 2 --algo exact --algo approx --out " + path);
  REQUIRE(r.exit_code == 0);
  const auto records = rga::parse_csv(slurp(path));
  std::remove(path.c_str());
  REQUIRE(records.size() == 4);
}

TEST_CASE("cli exit codes distinguish usage and budget errors") {
  REQUIRE(run_cli("mis --n 30 --p 0.5 --seed 1 --algo brute").exit_code == 2);
  REQUIRE(run_cli("bogus-subcommand").exit_code == 1);
  REQUIRE(run_cli("mis --algo brute").exit_code == 1);       // neither --input nor --n
  REQUIRE(run_cli("gen --n 4 --p 1.5 --seed 1").exit_code == 1);
  REQUIRE(run_cli("--help").exit_code == 0);
}
