// One PASS/FAIL line per acceptance criterion, with runtimes against budgets.

#include "hx/scenarios.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace hx;

namespace {

const Cache kNoCache;

Report run(const std::string& name, ScenarioParams p = {}) { return run_scenario(name, p, kNoCache); }

ScenarioParams with_n(int n) {
  ScenarioParams p;
  p.n = n;
  return p;
}

std::string check_verdict(const Report& r, const std::string& id) {
  for (const auto& rec : r.records())
    if (rec["type"] == "check" && rec["check"] == id) return rec["verdict"];
  return "MISSING";
}

struct Criterion {
  int id;
  std::string title;
  double budget_s;
  std::function<bool(std::string&)> run;
};

bool all_pass(std::initializer_list<Report> rs, std::string& note) {
  bool ok = true;
  for (const auto& r : rs)
    if (r.verdict() != Verdict::Pass) {
      ok = false;
      note += r.scenario() + " " + to_string(r.verdict()) + "; ";
    }
  return ok;
}

}  // namespace

int main() {
  ScenarioParams r10;
  r10.radius = 10;
  r10.margin = 3;
  ScenarioParams crossprod;
  crossprod.samples = 100;

  std::vector<Criterion> criteria = {
      {1, "SL(2) extended quotient census", 1.0, [](std::string& n) { return all_pass({run("sl2-extquot")}, n); }},
      {2, "infinite dihedral KL basis, a-function, cells, P1-P8", 30.0,
       [&](std::string& n) { return all_pass({run("infdihedral-cells", r10), run("infdihedral-P-properties", r10)}, n); }},
      {3, "asymptotic ring, phi_q and centre", 120.0, [](std::string& n) { return all_pass({run("infdihedral-J")}, n); }},
      {4, "SO(5) cells at radius 12", 300.0, [](std::string& n) { return all_pass({run("so5-cells")}, n); }},
      {5, "SO(5) extended quotient and g6 orbits", 1.0, [](std::string& n) { return all_pass({run("so5-extquot")}, n); }},
      {6, "SO(5) match", 1.0, [](std::string& n) { return all_pass({run("so5-match")}, n); }},
      {7, "crossed product maps and evaluation modules", 30.0,
       [&](std::string& n) { return all_pass({run("sl2-crossprod", crossprod)}, n); }},
      {8, "GL(n) matcher, n = 2..5", 5.0,
       [](std::string& n) { return all_pass({run("gl-match", with_n(2)), run("gl-match", with_n(3)), run("gl-match", with_n(4)), run("gl-match", with_n(5))}, n); }},
      {9, "PGL(n): regular class, full match, (2,2) discrepancy", 5.0,
       [](std::string& n) {
         bool ok = all_pass({run("pgl-iwahori", with_n(2)), run("pgl-iwahori", with_n(3))}, n);
         auto r4 = run("pgl-iwahori", with_n(4));
         ok = ok && check_verdict(r4, "regular-class") == "PASS" && check_verdict(r4, "match") == "DISCREPANCY" &&
              r4.verdict() == Verdict::Discrepancy;
         n += "n=4 match " + check_verdict(r4, "match") + "; ";
         return ok;
       }},
      {10, "lowest cell against the identity-class component", 1.0,
       [](std::string& n) { return all_pass({run("lowest-cell")}, n); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string note;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note += std::string("error: ") + e.what() + "; ";
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) {
      ok = false;
      note += "over budget; ";
    }
    if (!ok) ++failed;
    if (note.size() >= 2) note.resize(note.size() - 2);
    std::printf("criterion %2d %s  %-55s %8.3f s (budget %g s)%s%s\n", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), s,
                c.budget_s, note.empty() ? "" : "  ", note.c_str());
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
