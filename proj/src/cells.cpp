#include "hx/hecke.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace hx {

namespace {

// Strongly connected components, numbered by their smallest member.
std::vector<int> scc(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0), comp(static_cast<std::size_t>(n), -1);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  int counter = 0, ncomp = 0;
  // iterative Tarjan
  std::vector<std::pair<int, std::size_t>> call;
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, next] = call.back();
      auto vi = static_cast<std::size_t>(v);
      if (next == 0 && index[vi] < 0) {
        index[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = 1;
      }
      if (next < adj[vi].size()) {
        int w = adj[vi][next++];
        auto wi = static_cast<std::size_t>(w);
        if (index[wi] < 0) {
          call.emplace_back(w, 0);
        } else if (on_stack[wi]) {
          low[vi] = std::min(low[vi], index[wi]);
        }
        continue;
      }
      if (low[vi] == index[vi]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp[static_cast<std::size_t>(w)] = ncomp;
        } while (w != v);
        ++ncomp;
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) {
        auto pi = static_cast<std::size_t>(call.back().first);
        low[pi] = std::min(low[pi], low[static_cast<std::size_t>(finished)]);
      }
    }
  }
  // renumber by smallest member
  std::vector<int> first(static_cast<std::size_t>(ncomp), -1), order;
  for (int v = 0; v < n; ++v)
    if (first[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] < 0) {
      first[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = static_cast<int>(order.size());
      order.push_back(v);
    }
  for (auto& c : comp) c = first[static_cast<std::size_t>(c)];
  return comp;
}

std::vector<std::vector<int>> members(const std::vector<int>& comp) {
  int k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(k));
  for (int v = 0; v < static_cast<int>(comp.size()); ++v) out[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  return out;
}

void add_edge(std::vector<int>& list, int x) {
  if (std::find(list.begin(), list.end(), x) == list.end()) list.push_back(x);
}

}  // namespace

CellPartition compute_cells(const KLBasis& kl, const AFunction& a) {
  const Ball& B = kl.ball();
  const int n = kl.size();
  const int g = kl.presentation().generator_count();
  CellPartition cp;
  cp.radius = B.radius();
  cp.left_edges.assign(static_cast<std::size_t>(n), {});
  cp.right_edges.assign(static_cast<std::size_t>(n), {});
  cp.boundary.assign(static_cast<std::size_t>(n), 0);
  for (int y = 0; y < n; ++y) {
    auto& L = cp.left_edges[static_cast<std::size_t>(y)];
    auto& R = cp.right_edges[static_cast<std::size_t>(y)];
    for (int side = 0; side < 2; ++side) {
      const bool left = side == 0;
      auto& E = left ? L : R;
      for (int s = 0; s < g; ++s) {
        if (left ? kl.left_descent(s, y) : kl.right_descent(s, y)) continue;
        int sy = left ? B.left_gen(s, y) : B.right_gen(s, y);
        if (sy >= 0) add_edge(E, sy);
        else cp.boundary[static_cast<std::size_t>(y)] = 1;
        const auto& mu = left ? kl.mu_left(s, y) : kl.mu_right(s, y);
        if (!mu) {
          cp.boundary[static_cast<std::size_t>(y)] = 1;
          continue;
        }
        for (const auto& [z, m] : *mu) add_edge(E, z);
      }
      for (int w = 0; w < B.omega_count(); ++w) add_edge(E, left ? B.left_omega(w, y) : B.right_omega(w, y));
    }
    std::sort(L.begin(), L.end());
    std::sort(R.begin(), R.end());
  }
  std::vector<std::vector<int>> both(static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y) {
    auto& e = both[static_cast<std::size_t>(y)];
    e = cp.left_edges[static_cast<std::size_t>(y)];
    e.insert(e.end(), cp.right_edges[static_cast<std::size_t>(y)].begin(), cp.right_edges[static_cast<std::size_t>(y)].end());
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  cp.left_cell = scc(cp.left_edges);
  cp.right_cell = scc(cp.right_edges);
  cp.two_sided_cell = scc(both);
  cp.left_cells = members(cp.left_cell);
  cp.right_cells = members(cp.right_cell);
  cp.two_sided_cells = members(cp.two_sided_cell);
  for (const auto& cell : cp.two_sided_cells) {
    bool cert = false, consistent = true;
    int av = -1;
    for (int z : cell) {
      if (!a.is_certified(z)) continue;
      int v = a.value[static_cast<std::size_t>(z)];
      if (!cert) av = v;
      else if (v != av) consistent = false;
      cert = true;
    }
    cp.cell_certified.push_back(cert);
    cp.cell_a.push_back(av);
    cp.cell_a_consistent.push_back(consistent);
  }
  for (int z = 0; z < n; ++z) {
    if (!a.is_certified(z)) continue;
    auto ds = kl.delta_and_sign(z);
    if (ds && ds->first == a.value[static_cast<std::size_t>(z)]) {
      cp.distinguished.push_back(z);
      cp.n_sign.push_back(ds->second);
    }
  }
  return cp;
}

std::vector<int> CellPartition::certified_two_sided() const {
  std::vector<int> out;
  for (std::size_t c = 0; c < two_sided_cells.size(); ++c)
    if (cell_certified[c]) out.push_back(static_cast<int>(c));
  return out;
}

std::vector<char> CellPartition::below_two_sided(int z) const {
  std::vector<char> seen(left_edges.size(), 0);
  std::deque<int> queue{z};
  seen[static_cast<std::size_t>(z)] = 1;
  while (!queue.empty()) {
    int y = queue.front();
    queue.pop_front();
    for (const auto* E : {&left_edges[static_cast<std::size_t>(y)], &right_edges[static_cast<std::size_t>(y)]})
      for (int x : *E)
        if (!seen[static_cast<std::size_t>(x)]) {
          seen[static_cast<std::size_t>(x)] = 1;
          queue.push_back(x);
        }
  }
  return seen;
}

std::optional<std::int64_t> CellPartition::n_hat(const Ball& ball, int z) const {
  int zi = ball.inverse(z);
  for (std::size_t k = 0; k < distinguished.size(); ++k)
    if (left_cell[static_cast<std::size_t>(distinguished[k])] == left_cell[static_cast<std::size_t>(zi)]) return n_sign[k];
  return std::nullopt;
}

// ---------------------------------------------------------------- P1-P8

std::vector<PropertyResult> check_properties(const KLBasis& kl, const AFunction& a, const HTable& h,
                                             const CellPartition& cells) {
  const Ball& B = kl.ball();
  const int n = kl.size();
  Gamma gamma{h, a};
  auto lab = [&](int i) { return B.label(i); };
  auto witness = [](PropertyResult& r, const std::string& w) {
    r.pass = false;
    if (r.witnesses.size() < 5) r.witnesses.push_back(w);
  };
  std::set<int> D(cells.distinguished.begin(), cells.distinguished.end());
  auto n_of = [&](int d) {
    auto it = std::find(cells.distinguished.begin(), cells.distinguished.end(), d);
    return cells.n_sign[static_cast<std::size_t>(it - cells.distinguished.begin())];
  };
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (h.has(x, y)) pairs.emplace_back(x, y);

  std::vector<PropertyResult> out;

  PropertyResult p1{"P1", true, 0, {}};
  for (int z = 0; z < n; ++z) {
    if (!a.is_certified(z)) continue;
    auto ds = kl.delta_and_sign(z);
    if (!ds) continue;
    ++p1.checked;
    if (a.value[static_cast<std::size_t>(z)] > ds->first)
      witness(p1, "z=" + lab(z) + " a=" + std::to_string(a.value[static_cast<std::size_t>(z)]) + " Delta=" + std::to_string(ds->first));
  }
  out.push_back(p1);

  PropertyResult p2{"P2", true, 0, {}};
  for (int d : cells.distinguished)
    for (auto [x, y] : pairs) {
      auto g = gamma(x, y, d);
      if (!g) continue;
      ++p2.checked;
      if (*g != 0 && x != B.inverse(y)) witness(p2, "x=" + lab(x) + " y=" + lab(y) + " d=" + lab(d));
    }
  out.push_back(p2);

  PropertyResult p3{"P3", true, 0, {}};
  for (int y = 0; y < n; ++y) {
    int yi = B.inverse(y);
    if (!h.has(y, yi)) continue;
    const auto& row = h.row(y, yi);
    bool known = std::all_of(row.begin(), row.end(), [&](const auto& t) { return a.is_certified(t.first); });
    if (!known) continue;
    ++p3.checked;
    int count = 0;
    for (const auto& [z, c] : row) {
      (void)c;
      if (!D.count(z)) continue;
      auto g = gamma(y, yi, z);
      if (g && *g != 0) ++count;
    }
    if (count != 1) witness(p3, "y=" + lab(y) + " matches=" + std::to_string(count));
  }
  out.push_back(p3);

  PropertyResult p4{"P4", true, 0, {}};
  for (int z = 0; z < n; ++z) {
    if (!a.is_certified(z)) continue;
    auto below = cells.below_two_sided(z);
    for (int zp = 0; zp < n; ++zp) {
      if (!below[static_cast<std::size_t>(zp)] || !a.is_certified(zp)) continue;
      ++p4.checked;
      if (a.value[static_cast<std::size_t>(zp)] < a.value[static_cast<std::size_t>(z)])
        witness(p4, "z'=" + lab(zp) + " <=LR z=" + lab(z));
    }
  }
  out.push_back(p4);

  PropertyResult p5{"P5", true, 0, {}};
  for (int d : cells.distinguished)
    for (int y = 0; y < n; ++y) {
      int yi = B.inverse(y);
      auto g = gamma(yi, y, d);
      if (!g) continue;
      ++p5.checked;
      if (*g == 0) continue;
      std::int64_t nd = n_of(d);
      if (*g != nd || (nd != 1 && nd != -1))
        witness(p5, "y=" + lab(y) + " d=" + lab(d) + " gamma=" + std::to_string(*g) + " n_d=" + std::to_string(nd));
    }
  out.push_back(p5);

  PropertyResult p6{"P6", true, 0, {}};
  for (int d : cells.distinguished) {
    ++p6.checked;
    if (B.product(d, d) != B.identity()) witness(p6, "d=" + lab(d));
  }
  out.push_back(p6);

  PropertyResult p7{"P7", true, 0, {}};
  for (auto [x, y] : pairs)
    for (const auto& [zi, c] : h.row(x, y)) {
      (void)c;
      int z = B.inverse(zi);
      // γ_{x,y,z} ≠ 0 only if z^-1 is in the support; compare both rotations
      for (auto [p, q, r] : {std::tuple{x, y, z}, std::tuple{z, x, y}}) {
        auto g1 = gamma(p, q, r);
        auto g2 = gamma(q, r, p);
        if (!g1 || !g2) continue;
        ++p7.checked;
        if (*g1 != *g2)
          witness(p7, "x=" + lab(p) + " y=" + lab(q) + " z=" + lab(r) + " " + std::to_string(*g1) + "!=" + std::to_string(*g2));
      }
    }
  out.push_back(p7);

  PropertyResult p8{"P8", true, 0, {}};
  for (auto [x, y] : pairs)
    for (const auto& [zi, c] : h.row(x, y)) {
      (void)c;
      int z = B.inverse(zi);
      auto g = gamma(x, y, z);
      if (!g || *g == 0) continue;
      if (!a.is_certified(x) || !a.is_certified(y)) continue;
      ++p8.checked;
      auto same = [&](int u, int w) { return cells.left_cell[static_cast<std::size_t>(u)] == cells.left_cell[static_cast<std::size_t>(w)]; };
      if (!same(x, B.inverse(y)) || !same(y, zi) || !same(z, B.inverse(x)))
        witness(p8, "x=" + lab(x) + " y=" + lab(y) + " z=" + lab(z));
    }
  out.push_back(p8);
  return out;
}

}  // namespace hx
