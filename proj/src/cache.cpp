#include "hx/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace fs = std::filesystem;

namespace hx {

namespace {

std::optional<std::string> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

constexpr const char* kSum = "# sum ";

// body with its checksum line removed; empty when the sum does not match
std::optional<std::string> checked_body(const std::string& text) {
  auto at = text.rfind(kSum);
  if (at == std::string::npos || (at > 0 && text[at - 1] != '\n')) return std::nullopt;
  std::string body = text.substr(0, at);
  std::string sum = text.substr(at + std::string(kSum).size());
  if (!sum.empty() && sum.back() == '\n') sum.pop_back();
  if (sum != fnv1a(body)) return std::nullopt;
  return body;
}

void store(const fs::path& p, const std::string& body) {
  const std::string text = body + kSum + fnv1a(body) + "\n";
  fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << text;
  }
  fs::rename(tmp, p);
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stoi(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad integer list");
  }
  return out;
}

}  // namespace

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

fs::path Cache::default_dir() {
  if (const char* e = std::getenv("HX_CACHE_DIR"); e && *e) return e;
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "hx";
  return ".hx-cache";
}

std::shared_ptr<KLBasis> Cache::kl(std::shared_ptr<const Ball> ball) const {
  if (!enabled()) return std::make_shared<KLBasis>(std::move(ball));
  const fs::path file = dir_ / (cache_key(*ball) + ".kl");
  if (auto text = slurp(file); text && (text = checked_body(*text))) {
    try {
      return KLBasis::deserialize(ball, *text);
    } catch (const std::exception&) {
      // fall through and rebuild
    }
  }
  auto kl = std::make_shared<KLBasis>(std::move(ball));
  store(file, kl->serialize());
  return kl;
}

HTable Cache::htable(const KLBasis& kl, int max_total) const {
  if (!enabled()) return HTable(kl, max_total);
  const fs::path file = dir_ / (cache_key(kl.ball()) + ".h" + std::to_string(max_total));
  if (auto text = slurp(file); text && (text = checked_body(*text))) {
    try {
      HTable t = HTable::deserialize(kl, *text);
      if (t.max_total() == max_total) return t;
    } catch (const std::exception&) {
    }
  }
  HTable t(kl, max_total);
  store(file, t.serialize());
  return t;
}

std::vector<Cache::Entry> Cache::list() const {
  std::vector<Entry> out;
  if (!enabled() || !fs::is_directory(dir_)) return out;
  for (const auto& de : fs::directory_iterator(dir_)) {
    if (!de.is_regular_file()) continue;
    const std::string name = de.path().filename().string();
    const std::string ext = de.path().extension().string();
    Entry e;
    e.file = name;
    e.key = de.path().stem().string();
    e.bytes = de.file_size();
    if (ext == ".kl") {
      e.kind = "kl";
    } else if (ext.size() > 2 && ext.rfind(".h", 0) == 0 &&
               std::all_of(ext.begin() + 2, ext.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      e.kind = "h";
      e.max_total = std::stoi(ext.substr(2));
    } else {
      continue;
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.file < b.file; });
  return out;
}

int Cache::clear() const {
  int n = 0;
  for (const auto& e : list()) n += fs::remove(dir_ / e.file) ? 1 : 0;
  return n;
}

std::shared_ptr<const Ball> ball_from_key(const std::string& key) {
  const auto w = key.rfind("-w");
  const auto r = key.rfind("-r", w);
  if (w == std::string::npos || r == std::string::npos) throw std::invalid_argument("bad cache key '" + key + "'");
  try {
    FamilyTag tag = FamilyTag::parse(key.substr(0, r));
    std::size_t used = 0;
    const std::string rs = key.substr(r + 2, w - r - 2);
    int radius = std::stoi(rs, &used);
    if (used != rs.size() || radius < 0) throw std::invalid_argument("radius");
    auto ball = std::make_shared<Ball>(Presentation::make(tag, parse_ints(key.substr(w + 2))), radius);
    if (cache_key(*ball) != key) throw std::invalid_argument("key does not round-trip");
    return ball;
  } catch (const std::exception& ex) {
    throw std::invalid_argument("bad cache key '" + key + "': " + ex.what());
  }
}

Cache::VerifyResult Cache::verify(std::uint64_t seed, double fraction) const {
  VerifyResult res;
  const auto entries = list();
  std::map<std::string, std::shared_ptr<KLBasis>> fresh;
  auto fresh_kl = [&](const std::string& key) {
    auto it = fresh.find(key);
    if (it == fresh.end()) it = fresh.emplace(key, std::make_shared<KLBasis>(ball_from_key(key))).first;
    return it->second;
  };
  for (const auto& e : entries) {
    ++res.files;
    const fs::path file = dir_ / e.file;
    try {
      auto text = slurp(file);
      if (!text) throw std::runtime_error("unreadable");
      auto body = checked_body(*text);
      if (!body) {
        res.problems.push_back(e.file + ": checksum mismatch");
        continue;
      }
      text = body;
      auto kl = fresh_kl(e.key);
      if (e.kind == "kl") {
        if (*text != kl->serialize()) res.problems.push_back(e.file + ": differs from a fresh computation");
        continue;
      }
      HTable t = HTable::deserialize(*kl, *text);
      const Ball& B = kl->ball();
      std::vector<std::pair<int, int>> pairs;
      for (int x = 0; x < B.size(); ++x)
        for (int y = 0; y < B.size(); ++y)
          if (t.has(x, y)) pairs.emplace_back(x, y);
      std::mt19937_64 rng(seed);
      std::shuffle(pairs.begin(), pairs.end(), rng);
      const auto want = std::max<std::size_t>(1, static_cast<std::size_t>(fraction * static_cast<double>(pairs.size()) + 0.999));
      pairs.resize(std::min(want, pairs.size()));
      for (const auto& [x, y] : pairs) {
        ++res.rows_checked;
        if (kl->h_constants(x, y).terms != t.row(x, y)) {
          res.problems.push_back(e.file + ": row " + B.label(x) + " " + B.label(y) + " differs");
          break;
        }
      }
    } catch (const std::exception& ex) {
      res.problems.push_back(e.file + ": " + ex.what());
    }
  }
  return res;
}

}  // namespace hx
