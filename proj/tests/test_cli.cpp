// End-to-end fixtures for the command-line tool: spawns the built binary and
// checks output and exit codes. MILD4_BIN and MILD4_DATA come from ctest.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run(const std::string& args) {
  const char* bin = std::getenv("MILD4_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult res;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
  int rc = pclose(pipe);
  res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return res;
}

std::string data_file(const std::string& name) {
  const char* dir = std::getenv("MILD4_DATA");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("classify the published prime sets") {
  struct Fixture {
    const char* primes;
    int orbit;
    bool mild;
  };
  for (Fixture fx : {Fixture{"31,37,43,67", 1, true}, Fixture{"67,79,97,127", 2, false},
                     Fixture{"61,73,79,97", 3, false}, Fixture{"31,37,61,67", 4, true}}) {
    CmdResult r = run(std::string("classify --p 3 --primes ") + fx.primes + " --json");
    REQUIRE(r.status == 0);
    json j = json::parse(r.out);
    CHECK(j["orbit"] == fx.orbit);
    CHECK(j["mild"] == fx.mild);
    CHECK(j["methods"]["agree"] == true);
    CHECK(j["p"] == 3);
    CHECK(j["input"]["kind"] == "primes");
    CHECK(j["linking"]["l"].size() == 4);
    CHECK(j["dims"][0] == 4);
    CHECK(j["dims"][1] == 2);
  }
}

TEST_CASE("classify a matrix file") {
  CmdResult r = run("classify --matrix " + data_file("cycle.txt") + " --json");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["orbit"] == 1);
  CHECK(j["mild"] == true);
  CHECK(j["linking"].is_null());
  CHECK(j["input"]["kind"] == "matrix");

  for (auto [file, orbit] : {std::pair<const char*, int>{"orbit1.txt", 1},
                             {"orbit2.txt", 2},
                             {"orbit3.txt", 3},
                             {"orbit4.txt", 4}}) {
    CmdResult rr = run("classify --matrix " + data_file(file) + " --json");
    REQUIRE(rr.status == 0);
    CHECK(json::parse(rr.out)["orbit"] == orbit);
  }
}

TEST_CASE("rank-deficient matrices exit zero with a null orbit") {
  CmdResult r = run("classify --matrix " + data_file("rankdef.txt") + " --json");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["orbit"].is_null());
  CHECK(j["mild"] == false);
  REQUIRE(j["notes"].size() == 1);
  std::string note = j["notes"][0];
  CHECK(note.find("CupProductNotSurjective") == 0);
}

TEST_CASE("json output is byte-identical across runs") {
  CmdResult a = run("classify --p 3 --primes 31,37,61,67 --json");
  CmdResult b = run("classify --p 3 --primes 31,37,61,67 --json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("dims command") {
  CmdResult r1 = run("dims --matrix " + data_file("orbit1.txt") + " --max-degree 4");
  REQUIRE(r1.status == 0);
  CHECK(r1.out == "4 2 4 6\nstrongly free: yes\n");

  CmdResult r3 = run("dims --matrix " + data_file("orbit3.txt") + " --max-degree 4");
  REQUIRE(r3.status == 0);
  CHECK(r3.out == "4 2 4 7\nstrongly free: no\n");

  CmdResult r2 = run("dims --matrix " + data_file("orbit2.txt") + " --max-degree 3");
  REQUIRE(r2.status == 0);
  CHECK(r2.out == "4 2 5\nstrongly free: no\n");
}

TEST_CASE("poincare command") {
  CmdResult r1 = run("poincare --matrix " + data_file("orbit1.txt") + " --max-degree 5");
  REQUIRE(r1.status == 0);
  CHECK(r1.out.find("residual: 0 0 0 0 0 0") != std::string::npos);
  CHECK(r1.out.find("zero through t^5: yes") != std::string::npos);

  CmdResult r2 = run("poincare --matrix " + data_file("orbit2.txt") + " --max-degree 3");
  REQUIRE(r2.status == 0);
  CHECK(r2.out.find("zero through t^3: no") != std::string::npos);

  CmdResult r3 = run("poincare --matrix " + data_file("orbit3.txt") + " --max-degree 4");
  REQUIRE(r3.status == 0);
  CHECK(r3.out.find("zero through t^4: no") != std::string::npos);
  // the first discrepancy sits at t^4
  CHECK(r3.out.find("residual: 0 0 0 0 ") != std::string::npos);
}

TEST_CASE("search command") {
  CmdResult r = run("search --p 3 --max-prime 70 --orbit 4 --json");
  REQUIRE(r.status == 0);
  bool found = false;
  std::size_t pos = 0;
  while (pos < r.out.size()) {
    std::size_t nl = r.out.find('\n', pos);
    if (nl == std::string::npos) break;
    json j = json::parse(r.out.substr(pos, nl - pos));
    CHECK(j["orbit"] == 4);
    if (j["primes"] == json::array({31, 37, 61, 67})) found = true;
    pos = nl + 1;
  }
  CHECK(found);

  CmdResult empty = run("search --p 3 --max-prime 20");
  CHECK(empty.status == 0);
  CHECK(empty.out.empty());  // only three usable primes below 20

  CmdResult r3 = run("search --p 3 --max-prime 100 --orbit 3");
  REQUIRE(r3.status == 0);
  CHECK(r3.out.find("61 73 79 97 orbit 3") != std::string::npos);

  CmdResult lim = run("search --p 3 --max-prime 70 --limit 2 --json");
  REQUIRE(lim.status == 0);
  int lines = 0;
  for (char c : lim.out)
    if (c == '\n') ++lines;
  CHECK(lines == 2);
}

TEST_CASE("enumerate command") {
  CmdResult r2 = run("enumerate --p 3 --dim 2 --json");
  REQUIRE(r2.status == 0);
  json j2 = json::parse(r2.out);
  CHECK(j2["count"] == 4);
  CHECK(j2["total"] == 11011);

  CmdResult r1 = run("enumerate --p 3 --dim 1 --json");
  REQUIRE(r1.status == 0);
  json j1 = json::parse(r1.out);
  CHECK(j1["count"] == 2);
  CHECK(j1["total"] == 364);

  CmdResult r5 = run("enumerate --p 5 --dim 1 --json");
  REQUIRE(r5.status == 0);
  CHECK(json::parse(r5.out)["count"] == 2);
}

TEST_CASE("input errors exit one") {
  CHECK(run("classify --p 3 --primes 31,31,43,67").status == 1);
  CHECK(run("classify --p 4 --primes 5,13,17,29").status == 1);
  CHECK(run("classify --matrix /nonexistent/file.txt").status == 1);
  CHECK(run("classify").status == 1);
  CHECK(run("dims --matrix " + data_file("orbit1.txt") + " --max-degree 9").status == 1);
  CHECK(run("bogus-subcommand").status == 1);
  CHECK(run("search --p 3 --max-prime 200000").status == 1);
  // the two input sources are mutually exclusive
  CHECK(run("classify --matrix " + data_file("orbit1.txt") + " --p 3 --primes 31,37,43,67")
            .status == 1);
}
