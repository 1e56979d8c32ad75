#include "doctest.h"
#include "hx/scenarios.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace hx;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("hx-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::trunc);
  out << s;
}

std::string fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

}  // namespace

TEST_CASE("every catalog scenario passes at its defaults, except the PGL(4) discrepancy") {
  Cache none;
  CHECK(scenario_catalog().size() == 13);
  for (const auto& s : scenario_catalog()) {
    INFO(s.name);
    auto r = run_scenario(s.name, {}, none);
    CHECK(r.verdict() == Verdict::Pass);
  }
  ScenarioParams p;
  p.n = 4;
  CHECK(run_scenario("pgl-iwahori", p, none).verdict() == Verdict::Discrepancy);
  p.n = 2;
  CHECK(run_scenario("pgl-iwahori", p, none).verdict() == Verdict::Pass);
  for (int n = 2; n <= 5; ++n) {
    p.n = n;
    CHECK(run_scenario("gl-match", p, none).verdict() == Verdict::Pass);
  }
}

TEST_CASE("reports are deterministic and record their parameters") {
  Cache none;
  ScenarioParams p;
  p.seed = 17;
  p.samples = 20;
  auto a = run_scenario("sl2-crossprod", p, none).records_text();
  auto b = run_scenario("sl2-crossprod", p, none).records_text();
  CHECK(a == b);
  std::istringstream is(a);
  std::string line;
  std::getline(is, line);
  auto h = Json::parse(line);
  CHECK(h["schema"] == kReportSchema);
  CHECK(h["seed"] == 17);
  CHECK(h["params"]["samples"] == 20);
  int checks = 0;
  while (std::getline(is, line)) {
    auto j = Json::parse(line);
    if (j["type"] == "data") CHECK(j.contains("certified"));
    if (j["type"] == "check") {
      ++checks;
      CHECK(j.contains("expect"));
      CHECK(j.contains("witnesses"));
    }
  }
  CHECK(checks > 5);
  p.seed = 18;
  CHECK(run_scenario("sl2-crossprod", p, none).records_text() != a);
}

TEST_CASE("parameter validation") {
  Cache none;
  ScenarioParams p;
  CHECK_THROWS_AS(run_scenario("no-such-scenario", p, none), UsageError);
  p.radius = 5;
  CHECK_THROWS_AS(run_scenario("so5-extquot", p, none), UsageError);
  p = {};
  p.n = 7;
  CHECK_THROWS_AS(run_scenario("gl-match", p, none), UsageError);
  p = {};
  p.q = {Rational(2)};
  CHECK_THROWS_AS(run_scenario("infdihedral-J", p, none), UsageError);
  p = {};
  p.exponents = {2, 1};
  p.torsion = {1};
  CHECK_THROWS_AS(run_scenario("gl-bernstein-point", p, none), UsageError);
  p = {};
  p.group = "e8";
  CHECK_THROWS_AS(run_scenario("lowest-cell", p, none), UsageError);
}

TEST_CASE("uncertified SO(5) cells are reported, not guessed") {
  Cache none;
  ScenarioParams p;
  p.radius = 6;
  auto r = run_scenario("so5-cells", p, none);
  CHECK(r.verdict() == Verdict::Fail);
  CHECK(r.table_text().find("certification incomplete at radius 6") != std::string::npos);
}

TEST_CASE("cache round trip, determinism and corruption") {
  TempDir tmp;
  Cache cache(tmp.path);
  ScenarioParams p;
  auto first = run_scenario("infdihedral-P-properties", p, cache).records_text();
  auto entries = cache.list();
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].kind == "h");
  CHECK(entries[0].max_total == 10);
  CHECK(entries[1].kind == "kl");
  CHECK(cache.verify(1).clean());
  CHECK(run_scenario("infdihedral-P-properties", p, cache).records_text() == first);
  CHECK(cache.clear() == 2);
  CHECK(cache.list().empty());
  CHECK(cache.verify(1).clean());
  CHECK(run_scenario("infdihedral-P-properties", p, cache).records_text() == first);
  CHECK(run_scenario("infdihedral-P-properties", p, Cache{}).records_text() == first);

  // every h polynomial replaced by 7
  const fs::path h = tmp.path / entries[0].file;
  const std::string text = read(h);
  std::istringstream is(text);
  std::string line, bad;
  std::getline(is, line);
  bad = line + "\n";
  while (std::getline(is, line))
    if (line.rfind("# sum ", 0) != 0) bad += line.substr(0, line.rfind(' ')) + " 7\n";
  write(h, bad);
  auto v = cache.verify(3);
  CHECK_FALSE(v.clean());
  // a table failing its checksum is rebuilt on load
  CHECK(run_scenario("infdihedral-P-properties", p, cache).records_text() == first);
  CHECK(cache.verify(3).clean());
  CHECK(read(h) == text);

  // consistent checksum, wrong content: only recomputation notices
  write(h, bad + "# sum " + fnv(bad) + "\n");
  v = cache.verify(3);
  CHECK_FALSE(v.clean());
  CHECK(v.rows_checked >= 1);
  CHECK(v.problems.front().find("differs") != std::string::npos);

  const fs::path kl = tmp.path / entries[1].file;
  write(kl, read(kl) + "junk line\n");
  CHECK_FALSE(cache.verify(1).clean());
}

TEST_CASE("cache keys") {
  auto b = ball_from_key("so5-r4-w1,1,1");
  CHECK(b->radius() == 4);
  CHECK(cache_key(*b) == "so5-r4-w1,1,1");
  CHECK_THROWS_AS(ball_from_key("so5-r4"), std::invalid_argument);
  CHECK_THROWS_AS(ball_from_key("nope-r4-w1"), std::invalid_argument);
}
