#pragma once

// On-disk cache of p-polynomials (<key>.kl) and h-constant tables
// (<key>.h<M>), one namespace per ball key.

#include "hx/hecke.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

namespace hx {

class Cache {
 public:
  // empty path: no caching, everything is recomputed
  explicit Cache(std::filesystem::path dir = {});
  // $HX_CACHE_DIR, else $HOME/.cache/hx, else ./.hx-cache
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  bool enabled() const { return !dir_.empty(); }

  // unreadable or mismatching files are recomputed and rewritten
  std::shared_ptr<KLBasis> kl(std::shared_ptr<const Ball> ball) const;
  HTable htable(const KLBasis& kl, int max_total) const;

  struct Entry {
    std::string file;
    std::string key;
    std::string kind;  // "kl" or "h"
    int max_total = -1;
    std::uintmax_t bytes = 0;
  };
  std::vector<Entry> list() const;  // sorted by file name
  int clear() const;                // number of files removed

  struct VerifyResult {
    long files = 0;
    long rows_checked = 0;
    std::vector<std::string> problems;
    bool clean() const { return problems.empty(); }
  };
  // p-polynomial files are compared with a fresh computation; a seeded random
  // fraction of each h table's rows is recomputed through the T-basis.
  VerifyResult verify(std::uint64_t seed, double fraction = 0.05) const;

 private:
  std::filesystem::path dir_;
};

// "<family>-r<R>-w<weights>" back to a ball; throws std::invalid_argument
std::shared_ptr<const Ball> ball_from_key(const std::string& key);

}  // namespace hx
