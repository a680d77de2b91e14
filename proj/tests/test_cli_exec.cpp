#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string("\"") + SCOH_BIN + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  RunResult r;
  r.output = out;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("dims emits one csv row") {
  const RunResult r = run("dims --lambda=1/3 --mu=1/3 --format=csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "lambda,mu,dim_even,dim_odd,label,N,W,stabilized\n"
        "1/3,1/3,1,0,diagonal,8,3,yes\n");
}

TEST_CASE("dims runs are byte identical") {
  const std::string args = "sweep --lambda=0,1/3 --delta=0,1/2 --format=json";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("missing and malformed arguments exit with the usage code") {
  CHECK(run("dims --lambda=1/3").exit_code == 2);
  CHECK(run("dims --lambda=abc --mu=0").exit_code == 2);
  CHECK(run("dims --lambda=1.5 --mu=0").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("sweep --lambda=1:2:0 --delta=0").exit_code == 2);
  CHECK(run("dims --lambda=0 --mu=0 --format=yaml").exit_code == 2);
  CHECK(run("verify --k=0").exit_code == 2);
  CHECK(run("verify --k=1 --lambda=0").exit_code == 2);
  CHECK(run("verify").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  const RunResult r = run("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("dims") != std::string::npos);
  CHECK(r.output.find("sweep") != std::string::npos);
}

TEST_CASE("verify shorthand resolves the resonant pair") {
  const RunResult r = run("verify --k=1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verify lambda=0 mu=1/2") == 0);
  CHECK(r.output.find("verdict: pass") != std::string::npos);
}

TEST_CASE("structure table subcommand") {
  const RunResult r = run("table-check");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "structure table: pass\n");
}

TEST_CASE("truncation failures surface in the exit code") {
  // order 7 misses the order 9 generator, so 7 vs 9 disagree
  CHECK(run("dims --lambda=-2 --mu=5/2 --order=7").exit_code == 3);
  // order 3 and 5 agree on the wrong answer; only --check catches it
  const RunResult r = run("dims --lambda=-2 --mu=5/2 --order=3 --check");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("check failed") != std::string::npos);
  CHECK(run("dims --lambda=-2 --mu=5/2 --order=3").exit_code == 0);
}

TEST_CASE("output file matches stdout") {
  const char* path = "scoh_cli_out.csv";
  const RunResult direct = run("dims --lambda=0 --mu=1/2 --format=csv");
  const RunResult filed = run(std::string("dims --lambda=0 --mu=1/2 --format=csv --out=") + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == direct.output);
  std::remove(path);
}

TEST_CASE("catalogue json parses and sweeps check out") {
  const RunResult r = run("catalogue --lambda=0 --k=2 --format=json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"catalogue\"") != std::string::npos);
  CHECK(r.output.find("\"odd-resonant k=2\"") != std::string::npos);
  CHECK(run("sweep --lambda=0,1/2 --delta=0,1/2 --check --format=csv").exit_code == 0);
}
