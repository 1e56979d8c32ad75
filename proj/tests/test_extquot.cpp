#include "doctest.h"
#include "hx/extquot.hpp"

#include <algorithm>
#include <numeric>

using namespace hx;

namespace {

int count(const std::map<Descriptor, int>& m, const Descriptor& d) {
  auto it = m.find(d);
  return it == m.end() ? 0 : it->second;
}

int element_named(const TorusAction& a, const std::string& name) {
  for (int g = 0; g < a.order(); ++g)
    if (a.name(g) == name) return g;
  FAIL("no element " << name);
  return -1;
}

// rank of an integer matrix over Q by fraction-free elimination
int rational_rank(IntMatrix m) {
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int p = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m(r, c) != 0) p = r;
    if (p < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c) == 0) continue;
      std::int64_t a = m(rank, c), b = m(r, c);
      for (int j = 0; j < m.cols(); ++j) m(r, j) = a * m(r, j) - b * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

// fixed N-torsion points divided by the N-torsion of the identity component
std::int64_t brute_components(const IntMatrix& m, int N) {
  const int r = m.rows();
  std::vector<int> x(static_cast<std::size_t>(r), 0);
  std::int64_t fixed = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      std::int64_t s = -x[static_cast<std::size_t>(i)];
      for (int j = 0; j < r; ++j) s += m(i, j) * x[static_cast<std::size_t>(j)];
      ok = s % N == 0;
    }
    if (ok) ++fixed;
    int i = 0;
    while (i < r && ++x[static_cast<std::size_t>(i)] == N) x[static_cast<std::size_t>(i++)] = 0;
    if (i == r) break;
  }
  int d = r - rational_rank(m - IntMatrix::identity(r));
  std::int64_t per = 1;
  for (int i = 0; i < d; ++i) per *= N;
  CHECK(fixed % per == 0);
  return fixed / per;
}

}  // namespace

TEST_CASE("descriptor basics") {
  CHECK(Descriptor::sym_product({1, 2}).to_string() == "SymProduct(2,1)");
  CHECK(Descriptor::sym_product({1, 2}).dimension() == 3);
  CHECK(Descriptor::line_mod_inversion().dimension() == 1);
  CHECK(Descriptor::torus_mod_group(2, "W(B2)").to_string() == "TorusModGroup(2,W(B2))");
  CHECK(symmetric_label({1, 2, 2}) == "S2xS2");
  CHECK(symmetric_label({1, 1}) == "1");
  CHECK(to_string(TorsionPoint{{1, 0}, {2, 1}, {3, 2}}) == "d(1,-1,e(2/3))");
}

TEST_CASE("action validation") {
  CHECK_THROWS_AS(TorusAction::from_matrices("bad", {IntMatrix{{1}}, IntMatrix{{2}}}), std::invalid_argument);
  CHECK_THROWS_AS(TorusAction::from_matrices("open", {IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{-1, 0}, {0, 1}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TorusAction::from_matrices("sign", {IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{-1, 0}, {0, 1}}}, {}, true),
                  std::invalid_argument);
  auto s3 = TorusAction::symmetric(3, true);
  CHECK(s3.rank() == 2);
  CHECK(s3.permutation_action());
  for (int g = 0; g < s3.order(); ++g) CHECK(s3.mul(g, s3.inverse(g)) == s3.identity());
}

TEST_CASE("inversion on C^x") {
  auto a = TorusAction::inversion();
  CHECK(conjugacy_classes(a).size() == 2);
  auto f = fixed_locus(a, 1);
  CHECK(f.dim == 0);
  CHECK(f.component_count == 2);
  CHECK(to_string(f.points[0]) == "d(1)");
  CHECK(to_string(f.points[1]) == "d(-1)");
  auto m = descriptor_multiset(extended_quotient(a));
  CHECK(m.size() == 2);
  CHECK(count(m, Descriptor::line_mod_inversion()) == 1);
  CHECK(count(m, Descriptor::point()) == 2);
}

TEST_CASE("swap on a rank two torus") {
  auto a = TorusAction::from_matrices("Z/2", {IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{0, 1}, {1, 0}}});
  auto f = fixed_locus(a, 1);
  CHECK(f.dim == 1);
  CHECK(f.component_count == 1);
}

TEST_CASE("SO(5) dual torus") {
  auto pres = Presentation::make({Family::ExtendedAffineB2, 2});
  auto a = TorusAction::dual_torus(*pres);
  CHECK(a.order() == 8);
  auto classes = conjugacy_classes(a);
  REQUIRE(classes.size() == 5);
  std::vector<std::string> tags;
  for (const auto& c : classes) tags.push_back(c.tag);
  CHECK(tags == std::vector<std::string>{"g1", "g2", "g3", "g5", "g6"});
  int g6 = element_named(a, "g6"), g5 = element_named(a, "g5");
  auto f6 = fixed_locus(a, g6);
  CHECK(f6.dim == 0);
  std::vector<std::string> pts;
  for (const auto& p : f6.points) pts.push_back(to_string(p));
  std::sort(pts.begin(), pts.end());
  CHECK(pts == std::vector<std::string>{"d(-1,-1)", "d(-1,1)", "d(1,-1)", "d(1,1)"});
  auto orbits6 = torsion_orbit_census(a, g6);
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits6) sizes.push_back(o.size());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 1});
  auto orbits5 = torsion_orbit_census(a, g5);
  REQUIRE(orbits5.size() == 2);
  CHECK(to_string(orbits5[0][0]) == "d(1,1)");
  CHECK(to_string(orbits5[1][0]) == "d(-1,-1)");
  CHECK_THROWS_AS(torsion_orbit_census(a, element_named(a, "g3")), std::invalid_argument);

  auto comps = extended_quotient(a);
  auto m = descriptor_multiset(comps);
  CHECK(count(m, Descriptor::point()) == 5);
  CHECK(count(m, Descriptor::line_mod_inversion()) == 3);
  CHECK(count(m, Descriptor::torus_mod_group(2, "W(B2)")) == 1);
  CHECK(comps.size() == 9);
  int total = 0;
  for (const auto& r : census(comps)) total += r.multiplicity;
  CHECK(total == static_cast<int>(comps.size()));
}

TEST_CASE("symmetric groups: classes and SymProduct components") {
  for (int n = 1; n <= 6; ++n) {
    auto a = TorusAction::symmetric(n);
    auto classes = conjugacy_classes(a);
    CHECK(static_cast<std::int64_t>(classes.size()) == partition_count(n));
    auto comps = extended_quotient(a);
    CHECK(static_cast<std::int64_t>(comps.size()) == partition_count(n));
    for (const auto& c : comps) {
      CHECK(c.descriptor.kind == Descriptor::Kind::SymProduct);
      CHECK(c.descriptor.dimension() == c.dim);
    }
    CHECK(comps.front().descriptor == Descriptor::sym_product({n}));
  }
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(8) == 22);
}

TEST_CASE("determinant-one torus") {
  for (int n = 2; n <= 4; ++n) {
    auto a = TorusAction::symmetric(n, true);
    // the n-cycle (1 2 ... n) fixes the n scalar roots of unity
    int cyc = -1;
    for (const auto& c : conjugacy_classes(a))
      if (c.tag == "(" + std::to_string(n) + ")") cyc = c.representative;
    REQUIRE(cyc >= 0);
    auto orbits = torsion_orbit_census(a, cyc);
    REQUIRE(static_cast<int>(orbits.size()) == n);
    for (const auto& o : orbits) {
      REQUIRE(o.size() == 1);
      for (const auto& z : o[0]) CHECK(z == o[0][0]);
      CHECK(n % o[0][0].order == 0);
    }
  }
  auto comps = extended_quotient(TorusAction::symmetric(4, true));
  int lines = 0;
  for (const auto& c : comps)
    if (c.class_tag == "(2,2)") {
      CHECK(c.descriptor == Descriptor::line_mod_inversion());
      ++lines;
    }
  CHECK(lines == 2);
  auto m3 = descriptor_multiset(extended_quotient(TorusAction::symmetric(3, true)));
  CHECK(count(m3, Descriptor::point()) == 3);
  CHECK(count(m3, Descriptor::free_line()) == 1);
  CHECK(count(m3, Descriptor::torus_mod_group(2, "S3")) == 1);
}

TEST_CASE("component counts agree with torsion enumeration") {
  std::vector<TorusAction> actions{TorusAction::inversion(), TorusAction::symmetric(2), TorusAction::symmetric(3),
                                   TorusAction::symmetric(3, true), TorusAction::symmetric(4, true),
                                   TorusAction::dual_torus(*Presentation::make({Family::ExtendedAffineB2, 2}))};
  for (const auto& a : actions) {
    REQUIRE(a.rank() <= 3);
    for (int g = 0; g < a.order(); ++g) {
      auto f = fixed_locus(a, g);
      CHECK(f.component_count == brute_components(a.matrix(g), 12));
      CHECK(f.dim == a.rank() - rational_rank(a.matrix(g) - IntMatrix::identity(a.rank())));
    }
  }
}
