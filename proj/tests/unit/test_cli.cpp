#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include "ttk/serialize.hpp"

using namespace ttk;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + TTK_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("word") {
  auto r = run("word 7 2 3 1 1");
  CHECK(r.status == 0);
  CHECK(r.out == "x y x y^3 x y^3\n");
  CHECK(run("word 7,2,3,1,1 --side outside").out == "x^2 y x y\n");
  CHECK(run("word 7 2 3 1 1 --side pattern").out == "AABBABB\n");
  r = run("--format json word 7 2 3 1 1");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["word"].is_string());
}

TEST_CASE("validation errors exit with 2") {
  CHECK(run("word 6 4 3 1 1").status == 2);
  CHECK(run("word 7 2 3 1").status == 2);
  CHECK(run("word 7 2 3 1 1 --side middle").status == 2);
  CHECK(run("surgery 7 2 3 1 x").status == 2);
  CHECK(run("--budget 9999 surgery 7 2 3 1 1").status == 2);
  CHECK(run("surgery 7 2 3 1 1", "TTK_WHITEHEAD_BUDGET=abc").status == 2);
  CHECK(run("surgery 7 2 3 1 1", "TTK_WHITEHEAD_BUDGET=100").status == 2);
  CHECK(run("--budget 20000 surgery 7 2 3 1 1", "TTK_WHITEHEAD_BUDGET=100").status == 0);
  CHECK(run("realize 2 3 4 --negative --positive").status == 2);
  CHECK(run("realize 1 1 4").status == 2);
  CHECK(run("enumerate --max-p 0").status == 2);
  CHECK(run("--format yaml enumerate --max-p 5").status == 2);
  CHECK(run("bogus").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("surgery report matches the library") {
  const auto r = run("surgery 7 2 3 1 1");
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(psf_report_from_json(j) == psf_report({7, 2, 3, 1, 1}));
  CHECK(j["mu"] == Json::array({2, 3, 5}));
  CHECK(j["certificates"]["certified"] == true);
  CHECK(j["oracle"]["inside"]["primitive"] == false);
  CHECK_FALSE(j["oracle"]["inside"].contains("sf_search"));
  CHECK(j["oracle"]["outside"]["primitive"] == true);
  CHECK(run("surgery 7 2 3 1 1").out == r.out);

  // no table row fires on the inside, so the bounded search runs
  const Json unclassified = Json::parse(run("surgery 8 3 4 1 1").out);
  CHECK(unclassified["oracle"]["inside"]["sf_search"] == "not detected");
  CHECK_FALSE(unclassified.contains("mu"));
}

TEST_CASE("realize") {
  auto r = run("realize 2 3 4");
  REQUIRE(r.status == 0);
  auto rec = knot_record_from_json(Json::parse(r.out));
  CHECK(rec.params == TtkParams{23, 5, 3, 1, -1});
  r = run("realize 5 3 2 --positive");
  REQUIRE(r.status == 0);
  rec = knot_record_from_json(Json::parse(r.out));
  CHECK(rec == realize_triple(5, 3, 2, RealizationVariant::Positive));
}

TEST_CASE("enumerate TSV equals the library enumeration") {
  const auto r = run("enumerate --max-p 14");
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == tsv_header());
  std::vector<KnotRecord> parsed;
  while (std::getline(in, line)) parsed.push_back(knot_record_from_tsv(line));
  CHECK(parsed == enumerate_middle_psf(14));

  const auto filtered = run("enumerate --max-p 14 --family 2 --eps -1 --max-q 5");
  std::istringstream fin(filtered.out);
  std::getline(fin, line);
  std::size_t rows = 0;
  while (std::getline(fin, line)) {
    const auto rec = knot_record_from_tsv(line);
    CHECK(rec.family == 2);
    CHECK(rec.params.n == -1);
    CHECK(rec.params.q <= 5);
    ++rows;
  }
  CHECK(rows > 0);
  CHECK(run("--format json enumerate --max-p 14").status == 0);
}

TEST_CASE("verify") {
  const auto r = run("verify --level quick");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
