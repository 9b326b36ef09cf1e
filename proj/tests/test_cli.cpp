#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "conesum/rational.hpp"

using nlohmann::json;

namespace {

std::string cliPath() {
  const char* p = std::getenv("CONESUM_CLI_BIN");
  REQUIRE_MESSAGE(p != nullptr, "CONESUM_CLI_BIN must point at the conesum binary");
  return p;
}

struct RunResult {
  int exitCode = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = cliPath() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::vector<json> jsonLines(const std::string& text) {
  std::vector<json> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty() || line[0] != '{') continue;
    rows.push_back(json::parse(line));
  }
  return rows;
}

} // namespace

TEST_CASE("tables: stirling1 grid contains the expected row") {
  const RunResult res = run("tables --family stirling1 --nmax 5");
  CHECK(res.exitCode == 0);
  bool found = false;
  for (const auto& row : jsonLines(res.output))
    if (row["n"] == 4 && row["k"] == 2) {
      found = true;
      CHECK(row["value"] == "11");
    }
  CHECK(found);
}

TEST_CASE("tables: orthoscheme and weyl-b grids") {
  const RunResult ortho = run("tables --family orthoscheme --n 2");
  CHECK(ortho.exitCode == 0);
  bool foundOrtho = false;
  for (const auto& row : jsonLines(ortho.output))
    if (row["n"] == 2 && row["j"] == 0 && row["k"] == 2) {
      foundOrtho = true;
      CHECK(row["value"] == "1/2");
    }
  CHECK(foundOrtho);

  const RunResult weyl = run("tables --family weyl-b --n 2");
  CHECK(weyl.exitCode == 0);
  bool foundWeyl = false;
  for (const auto& row : jsonLines(weyl.output))
    if (row["n"] == 2 && row["j"] == 1 && row["k"] == 1) {
      foundWeyl = true;
      CHECK(row["value"] == "1");
    }
  CHECK(foundWeyl);
}

TEST_CASE("tables: exact strings round-trip and csv projects the same rows") {
  const RunResult res = run("tables --family weyl-b --nmax 4");
  CHECK(res.exitCode == 0);
  const auto rows = jsonLines(res.output);
  CHECK(!rows.empty());
  for (const auto& row : rows) {
    const conesum::Rational v(row["value"].get<std::string>());
    CHECK(v.toString() == row["value"].get<std::string>());
  }
  const RunResult csv = run("tables --family weyl-b --nmax 4 --format csv");
  CHECK(csv.exitCode == 0);
  CHECK(csv.output.rfind("family,n,j,k,value\n", 0) == 0);
  // one header plus one line per row
  const auto lines = std::count(csv.output.begin(), csv.output.end(), '\n');
  CHECK(lines == static_cast<long>(rows.size()) + 1);
}

TEST_CASE("tables: invalid family fails with usage error") {
  const RunResult res = run("tables --family nonsense");
  CHECK(res.exitCode != 0);
}

TEST_CASE("invalid ranges exit nonzero") {
  CHECK(run("mc faces --d 2 --ns 3 --j 2 --samples 10").exitCode != 0);
  CHECK(run("mc faces --d 5 --ns 9 --j 0 --samples 10").exitCode != 0);
  CHECK(run("mc recovery --family WB --n 2 --j 2 --k 1 --samples 10").exitCode != 0);
  CHECK(run("mc recovery --family WA --n 3 --j 0 --k 2 --samples 10").exitCode != 0);
  CHECK(run("mc volumes --spec A0 --samples 10").exitCode != 0);
}

TEST_CASE("mc faces row carries exact value and z") {
  const RunResult res =
      run("mc faces --d 2 --ns 3 --j 0 --samples 2000 --seed 7 --threads 2");
  CHECK(res.exitCode == 0);
  const auto rows = jsonLines(res.output);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["exact"] == "11/3");
  CHECK(rows[0]["samples"] == 2000);
  CHECK(rows[0].contains("z"));
  const double z = rows[0]["z"].is_number() ? rows[0]["z"].get<double>() : 99.0;
  CHECK(std::fabs(z) <= 6.0);
}

TEST_CASE("mc volumes rows sum to one") {
  const RunResult res = run("mc volumes --spec A2xB2 --samples 5000 --seed 11");
  CHECK(res.exitCode == 0);
  const auto rows = jsonLines(res.output);
  REQUIRE(rows.size() == 5);
  double total = 0;
  for (const auto& row : rows) total += row["estimate"].get<double>();
  CHECK(total == 1.0);
}

TEST_CASE("mc recovery invertible cell is exactly one") {
  const RunResult res =
      run("mc recovery --family WB --n 2 --j 0 --k 2 --samples 500 --seed 3");
  CHECK(res.exitCode == 0);
  const auto rows = jsonLines(res.output);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["exact"] == "1");
  CHECK(rows[0]["estimate"] == 1.0);
  CHECK(rows[0]["inconclusive"] == 0);
}

TEST_CASE("mc angles: walk probability and ordered blocks") {
  const RunResult walk = run("mc angles --walk 2 --samples 20000 --seed 5");
  CHECK(walk.exitCode == 0);
  const auto rows = jsonLines(walk.output);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0]["exact"] == "3/8");

  const RunResult blocks =
      run("mc angles --lengths 1 1 --samples 20000 --seed 5");
  CHECK(blocks.exitCode == 0);
  const auto rows2 = jsonLines(blocks.output);
  REQUIRE(rows2.size() == 1);
  CHECK(std::fabs(rows2[0]["estimate"].get<double>() - 0.5) < 0.02);
}

TEST_CASE("same seed and config give byte-identical output") {
  const std::string args = "mc faces --d 2 --ns 2 2 --j 1 --samples 1000 --seed 99";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.exitCode == 0);
  CHECK(a.output == b.output);
  // a different worker count must not change the numbers either
  const RunResult c = run(args + " --threads 1");
  CHECK(jsonLines(a.output)[0]["estimate"] == jsonLines(c.output)[0]["estimate"]);
}

TEST_CASE("environment seed override") {
  const RunResult a = run("mc faces --d 2 --ns 3 --j 0 --samples 500 --seed 1");
  const std::string env = "CONESUM_SEED=1 " + cliPath() +
                          " mc faces --d 2 --ns 3 --j 0 --samples 500 --seed 777 2>&1";
  FILE* pipe = popen(env.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  CHECK(jsonLines(out)[0]["seed"] == 1);
  CHECK(jsonLines(a.output)[0]["estimate"] == jsonLines(out)[0]["estimate"]);
}

TEST_CASE("verify: default run passes and emits a schema-conforming report") {
  const std::string tmp = "/tmp/conesum_verify_report.json";
  const RunResult res =
      run("verify --samples 20000 --seed 20240601 --out " + tmp);
  CHECK(res.exitCode == 0);
  CHECK(res.output.find("FAIL") == std::string::npos);

  std::ifstream in(tmp);
  REQUIRE(in.good());
  const json report = json::parse(in);
  // structural conformance with schemas/verify-report.schema.json
  for (const char* key : {"suite", "seed", "sigma", "mc_samples", "checks", "passed", "failed"})
    CHECK(report.contains(key));
  CHECK(report["suite"] == "conesum-verify");
  CHECK(report["failed"] == 0);
  CHECK(report["checks"].is_array());
  CHECK(!report["checks"].empty());
  for (const auto& check : report["checks"]) {
    CHECK(check.contains("id"));
    CHECK(check.contains("status"));
    CHECK(check.contains("z"));
    CHECK(check.contains("seconds"));
    CHECK((check["status"] == "pass" || check["status"] == "fail"));
    CHECK(check["id"].get<std::string>().find('/') != std::string::npos);
  }
  std::remove(tmp.c_str());
}

TEST_CASE("verify: injected fault fails and names the check") {
  const RunResult res =
      run("verify --samples 2000 --inject-fault gf-oracle/stirling1");
  CHECK(res.exitCode != 0);
  CHECK(res.output.find("FAIL gf-oracle/stirling1") != std::string::npos);
}
