#include "prc/io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"

using prc::io::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(PRC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kModel = PRC_DATA_DIR "/g2u2.json";

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(run("check " + kModel + " --T 1,1,1").code == 0);
  const auto fail = run("check " + kModel + " --T 1,1,0.1");
  CHECK(fail.code == 1);
  CHECK(fail.out.find("fail at chain ({1,2,3}, {3})") != std::string::npos);
  CHECK(run("check " + kModel + " --T 1,1,1 --corollary").code == 0);
  CHECK(run("check " + kModel + " --T 1,1").code == 2);
  CHECK(run("check " + kModel + " --T 1,-1,1").code == 2);
}

TEST_CASE("eta json is exact") {
  const auto r = run("eta " + kModel + " --json");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"chains\":[{\"kprime\":[2],\"eta\":\"1/48\"},{\"kprime\":[3],\"eta\":\"3/20\"}]}\n");
  CHECK(run("--json eta flag3:4,2,4").out == r.out);
}

TEST_CASE("json outputs parse") {
  for (const std::string& cmd : std::vector<std::string>{"validate " + kModel, "subalgebras " + kModel, "chains " + kModel,
                                "check " + kModel + " --T 1,2,3", "ricci " + kModel + " --x 1,2,3",
                                "solve " + kModel + " --T 1,1,1", "catalog"}) {
    const auto r = run(cmd + " --json");
    CHECK_MESSAGE(r.code == 0, cmd);
    CHECK(Json::accept(r.out));
  }
  const auto ricci = Json::parse(run("ricci " + kModel + " --x 1,1,1 --json").out);
  CHECK(ricci["scalar"] == "15/4");
  CHECK(ricci["ricci"][0] == "17/48");
}

TEST_CASE("iterate prints one json line per step") {
  const auto r = run("iterate twosum:1,4,0,1/4,0,0,1/2 --start 1,1 --steps 4 --json");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const Json step = Json::parse(line);
    CHECK(step["step"] == ++n);
    CHECK(step["status"] == "solved");
  }
  CHECK(n == 4);
}

TEST_CASE("solve exit codes") {
  CHECK(run("solve " + kModel + " --T 1,1,1 --seed 3").code == 0);
  // d = (2,4): solvable iff z1/z2 > 4/11.
  CHECK(run("solve twosum:2,4,1/5,3/10,0,0,1 --T 0.1,1").code == 1);
  CHECK(run("solve twosum:2,4,1/5,3/10,0,0,1 --T 1,1").code == 0);
}

TEST_CASE("catalog output is a canonical model") {
  const auto r = run("catalog flag3 4 2 4");
  CHECK(r.code == 0);
  std::ifstream in(kModel);
  std::stringstream expected;
  expected << in.rdbuf();
  CHECK(r.out == expected.str());
  CHECK(run("catalog flag3 1 5 8").code == 2);
  CHECK(run("catalog nothing").code == 2);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("eta " + kModel + " --frobnicate").code == 2);
  CHECK(run("eta /nonexistent/model.json").code == 2);
  const std::string bad = "prc_cli_malformed.json";
  std::ofstream(bad) << "{\"s\": 3,";
  CHECK(run("validate " + bad).code == 2);
  std::ofstream(bad) << "{\"s\": 1, \"dims\": [3], \"killing\": [1], \"triples\": [], \"extra\": 1}";
  CHECK(run("validate " + bad).code == 2);
  std::remove(bad.c_str());
  CHECK(run("validate " + kModel + " --tol -1").code == 2);
}
