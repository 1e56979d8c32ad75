#include "doctest.h"
#include "hx/duality.hpp"

#include <numeric>

using namespace hx;

namespace {

// components of {d ∈ (C^×)^p : Π d_i^{w_i} = 1}: N-torsion solutions / N^{p-1}
std::int64_t brute_pi0(const std::vector<int>& w, int N) {
  const std::size_t p = w.size();
  std::vector<int> x(p, 0);
  std::int64_t sols = 0;
  while (true) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < p; ++i) s += static_cast<std::int64_t>(w[i]) * x[i];
    if (s % N == 0) ++sols;
    std::size_t i = 0;
    while (i < p && ++x[i] == N) x[i++] = 0;
    if (i == p) break;
  }
  std::int64_t per = 1;
  for (std::size_t i = 1; i < p; ++i) per *= N;
  return sols / per;
}

int count(const std::map<Descriptor, int>& m, const Descriptor& d) {
  auto it = m.find(d);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("partitions and duality") {
  CHECK(dual_partition({1, 1, 1, 1}) == Partition{4});
  CHECK(dual_partition({3, 1}) == Partition{2, 1, 1});
  for (int n = 1; n <= 8; ++n) {
    auto ps = partitions(n);
    CHECK(static_cast<std::int64_t>(ps.size()) == partition_count(n));
    for (const auto& p : ps) {
      CHECK(is_partition(p));
      CHECK(std::accumulate(p.begin(), p.end(), 0) == n);
      CHECK(dual_partition(dual_partition(p)) == p);
    }
  }
  CHECK_THROWS_AS(dual_partition({1, 2}), std::invalid_argument);
  CHECK(multiplicities({2, 2, 1}) == std::vector<std::pair<int, int>>{{2, 2}, {1, 1}});
}

TEST_CASE("centralizers") {
  auto gl4 = DualGroupDatum::make(GroupKind::GL, 4);
  // λ = (2,2): μ = (2,2), one part repeated twice
  auto f = centralizer_reductive(gl4, {"(2,2)", {2, 2}});
  CHECK(f.to_string() == "GLProduct(2)");
  CHECK(rep_ring_descriptor(f).components == std::vector<Descriptor>{Descriptor::sym_product({2})});
  for (int n = 2; n <= 5; ++n) {
    auto pgl = DualGroupDatum::make(GroupKind::PGL, n);
    Partition ones(static_cast<std::size_t>(n), 1);
    auto c = centralizer_reductive(pgl, {to_string(ones), ones});
    CHECK(c.kind == ReductiveDescriptor::Kind::FiniteCyclic);
    CHECK(c.order == n);
    CHECK(rep_ring_descriptor(c).components.size() == static_cast<std::size_t>(n));
  }
  auto so5 = DualGroupDatum::make(GroupKind::SO5);
  CHECK(so5.classes.size() == 4);
  CHECK(centralizer_reductive(so5, {"c1", {}}).kind == ReductiveDescriptor::Kind::TwoGroupSemidirectGm);
  CHECK(rep_ring_descriptor(centralizer_reductive(so5, {"e", {}})).components.size() == 2);
  CHECK(rep_ring_descriptor(centralizer_reductive(so5, {"c2", {}})).components ==
        std::vector<Descriptor>{Descriptor::line_mod_inversion(), Descriptor::line_mod_inversion()});
  CHECK_THROWS_AS(centralizer_reductive(so5, {"c9", {}}), std::invalid_argument);
  CHECK_THROWS_AS(centralizer_reductive(gl4, {"(3)", {3}}), std::invalid_argument);
  for (int n = 2; n <= 6; ++n) CHECK(DualGroupDatum::make(GroupKind::GL, n).classes.size() == static_cast<std::size_t>(partition_count(n)));
}

TEST_CASE("component group of GLProductInSL by brute force") {
  for (int n = 2; n <= 4; ++n) {
    auto pgl = DualGroupDatum::make(GroupKind::PGL, n);
    for (const auto& c : pgl.classes) {
      auto f = centralizer_reductive(pgl, c);
      if (f.kind != ReductiveDescriptor::Kind::GLProductInSL) continue;
      CHECK(f.component_group_order() == brute_pi0(f.weights, 12));
    }
  }
  ReductiveDescriptor r;
  r.kind = ReductiveDescriptor::Kind::GLProductInSL;
  r.blocks = {2};
  r.weights = {2};
  CHECK(r.component_group_order() == 2);
  CHECK(rep_ring_descriptor(r).disconnected);
  r.blocks = {1, 1};
  r.weights = {4, 6};
  CHECK(r.component_group_order() == brute_pi0(r.weights, 12));
}

TEST_CASE("crossed product reading") {
  auto c = crossed_product_components();
  CHECK(c.size() == 4);
  CHECK(std::count(c.begin(), c.end(), Descriptor::point()) == 3);
}

TEST_CASE("matcher") {
  auto sl2 = match_conjecture(GroupKind::SL2);
  CHECK(sl2.verdict == Verdict::Pass);
  CHECK(count(sl2.cell_side, Descriptor::line_mod_inversion()) == 1);
  CHECK(count(sl2.cell_side, Descriptor::point()) == 2);

  auto so5 = match_conjecture(GroupKind::SO5);
  CHECK(so5.verdict == Verdict::Pass);
  CHECK(count(so5.cell_side, Descriptor::point()) == 5);
  CHECK(count(so5.cell_side, Descriptor::line_mod_inversion()) == 3);
  CHECK(count(so5.cell_side, Descriptor::torus_mod_group(2, "W(B2)")) == 1);

  for (int n = 2; n <= 5; ++n) {
    auto gl = match_conjecture(GroupKind::GL, n);
    CHECK(gl.verdict == Verdict::Pass);
    int total = 0;
    for (const auto& [d, k] : gl.extquot_side) {
      CHECK(d.kind == Descriptor::Kind::SymProduct);
      total += k;
    }
    CHECK(total == partition_count(n));
  }
  for (int n = 2; n <= 3; ++n) CHECK(match_conjecture(GroupKind::PGL, n).verdict == Verdict::Pass);
  auto pgl4 = match_conjecture(GroupKind::PGL, 4);
  CHECK(pgl4.verdict == Verdict::Discrepancy);
  REQUIRE(pgl4.notes.size() == 1);
  CHECK(pgl4.notes.front().find("(2,2)") != std::string::npos);
  CHECK_THROWS_AS(match_conjecture(GroupKind::GL, 9), std::invalid_argument);
}

TEST_CASE("lowest cell against the identity class") {
  for (auto [kind, n] : std::vector<std::pair<GroupKind, int>>{{GroupKind::SO5, 0}, {GroupKind::PGL, 2}, {GroupKind::PGL, 3}, {GroupKind::PGL, 4}}) {
    auto d = DualGroupDatum::make(kind, n);
    const UnipotentClass& lowest = kind == GroupKind::SO5 ? d.classes.back() : d.classes.front();
    auto full = rep_ring_descriptor(centralizer_reductive(d, lowest));
    REQUIRE(full.components.size() == 1);
    auto comps = extended_quotient(d.action);
    CHECK(comps.front().representative == d.action.identity());
    CHECK(full.components.front() == comps.front().descriptor);
  }
}

TEST_CASE("Bernstein points for GL") {
  auto b1 = bernstein_point_gl({1}, {1});
  CHECK(b1.components.size() == 1);
  CHECK(b1.hecke_factors == std::vector<std::string>{"H(~A0, q^1)"});
  auto b4 = bernstein_point_gl({4}, {1});
  CHECK(b4.components.size() == 5);
  auto b2 = bernstein_point_gl({1, 1}, {1, 2});
  CHECK(b2.components.size() == 1);
  CHECK(b2.components.front().descriptor == Descriptor::sym_product({1, 1}));
  CHECK(b2.hecke_factors.size() == 2);
  CHECK(bernstein_point_gl({2, 3}, {1, 1}).components.size() == 6);
  CHECK_THROWS_AS(bernstein_point_gl({0}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(bernstein_point_gl({1, 2}, {1}), std::invalid_argument);
}
