#include "hx/scenarios.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

namespace {

constexpr int kUsage = 3;

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<int> int_list(const std::string& s, const char* flag) {
  std::vector<int> out;
  for (const auto& x : split(s)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(x, &used));
      if (used != x.size()) throw std::invalid_argument(x);
    } catch (const std::exception&) {
      throw hx::UsageError(std::string("--") + flag + " expects comma-separated integers");
    }
  }
  if (out.empty()) throw hx::UsageError(std::string("--") + flag + " is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hx: Hecke algebra, asymptotic ring and extended quotient verification"};
  app.require_subcommand(1);

  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "cache directory (default $HX_CACHE_DIR or ~/.cache/hx)");
  bool no_cache = false;
  app.add_flag("--no-cache", no_cache, "compute everything, read and write no cache files");

  auto* run = app.add_subcommand("run", "run a scenario");
  std::string scenario, format = "table", q, exponents, torsion;
  std::optional<int> radius, margin, samples, n;
  std::optional<std::string> group;
  std::uint64_t seed = 1;
  run->add_option("scenario", scenario, "scenario name (see `hx list`)")->required();
  run->add_option("--radius", radius, "ball radius");
  run->add_option("--margin", margin, "a-function certification margin");
  run->add_option("--q", q, "comma-separated rational q values");
  run->add_option("--samples", samples, "random sample count");
  run->add_option("--seed", seed, "sampling seed")->capture_default_str();
  run->add_option("--n", n, "rank parameter for type A scenarios");
  run->add_option("--group", group, "sl2, so5, pglN, glN or all");
  run->add_option("--exponents", exponents, "comma-separated exponents e_i");
  run->add_option("--torsion", torsion, "comma-separated torsion numbers r_i");
  run->add_option("--format", format, "table or records")->check(CLI::IsMember({"table", "records"}))->capture_default_str();

  auto* list = app.add_subcommand("list", "list scenarios");

  auto* cache = app.add_subcommand("cache", "inspect the cache");
  cache->require_subcommand(1);
  auto* cache_list = cache->add_subcommand("list", "list cached tables");
  auto* cache_clear = cache->add_subcommand("clear", "remove cached tables");
  auto* cache_verify = cache->add_subcommand("verify", "recompute a random 5% of cached rows");
  std::uint64_t verify_seed = 1;
  cache_verify->add_option("--seed", verify_seed, "row sampling seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  hx::Cache store(no_cache ? std::filesystem::path{} : cache_dir.empty() ? hx::Cache::default_dir() : std::filesystem::path(cache_dir));

  try {
    if (*list) {
      for (const auto& s : hx::scenario_catalog()) {
        std::string flags;
        for (const auto& f : s.flags) flags += " --" + f;
        std::cout << s.name << "\n    " << s.summary << (flags.empty() ? "" : "\n    flags:" + flags) << "\n";
      }
      return 0;
    }
    if (*cache) {
      if (*cache_list) {
        std::cout << "cache " << store.dir().string() << "\n";
        for (const auto& e : store.list()) std::cout << e.file << "  " << e.kind << "  " << e.bytes << " bytes\n";
        return 0;
      }
      if (*cache_clear) {
        std::cout << "removed " << store.clear() << " files from " << store.dir().string() << "\n";
        return 0;
      }
      auto v = store.verify(verify_seed);
      std::cout << "files " << v.files << ", h rows recomputed " << v.rows_checked << "\n";
      for (const auto& p : v.problems) std::cout << "corrupt: " << p << "\n";
      std::cout << (v.clean() ? "clean" : "corruption detected") << "\n";
      return v.clean() ? 0 : 1;
    }
    hx::ScenarioParams p;
    p.radius = radius;
    p.margin = margin;
    p.samples = samples;
    p.n = n;
    p.group = group;
    p.seed = seed;
    if (!q.empty()) {
      for (const auto& x : split(q)) {
        try {
          p.q.push_back(hx::parse_rational(x));
        } catch (const std::exception&) {
          throw hx::UsageError("--q expects comma-separated rationals");
        }
      }
    }
    if (!exponents.empty()) p.exponents = int_list(exponents, "exponents");
    if (!torsion.empty()) p.torsion = int_list(torsion, "torsion");
    auto report = hx::run_scenario(scenario, p, store);
    std::cout << (format == "records" ? report.records_text() : report.table_text());
    return hx::exit_code(report.verdict());
  } catch (const hx::UsageError& e) {
    std::cerr << "hx: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "hx: error: " << e.what() << "\n";
    return 1;
  }
}
