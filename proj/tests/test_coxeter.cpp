#include "doctest.h"
#include "hx/coxeter.hpp"

#include <set>

using namespace hx;

namespace {

std::vector<FamilyTag> affine_families() {
  return {{Family::InfiniteDihedral, 1}, {Family::ExtendedAffineAPrime, 2}, {Family::ExtendedAffineAPrime, 3},
          {Family::ExtendedAffineAPrime, 4}, {Family::ExtendedAffineB2, 2}, {Family::ExtendedAffineA, 2},
          {Family::ExtendedAffineA, 3}};
}

}  // namespace

TEST_CASE("family tags parse") {
  CHECK(FamilyTag::parse("pgl3") == FamilyTag{Family::ExtendedAffineAPrime, 3});
  CHECK(FamilyTag::parse("gl4") == FamilyTag{Family::ExtendedAffineA, 4});
  CHECK(FamilyTag::parse("so5").family == Family::ExtendedAffineB2);
  CHECK(FamilyTag::parse("infdihedral").name() == "infdihedral");
  CHECK_THROWS_AS(FamilyTag::parse("e8"), std::invalid_argument);
}

TEST_CASE("length agrees with BFS word length") {
  for (auto tag : affine_families()) {
    auto P = Presentation::make(tag);
    int radius = tag.family == Family::ExtendedAffineAPrime && tag.n == 4 ? 6 : 8;
    auto dist = P->bfs_lengths(radius);
    for (const auto& [x, d] : dist) CHECK(P->length(x) == d);
    if (P->omega_finite()) {
      Ball B(P, radius);
      CHECK(static_cast<std::size_t>(B.size()) == dist.size());
    }
  }
}

TEST_CASE("infinite dihedral basics") {
  auto P = Presentation::make({Family::InfiniteDihedral, 1});
  CHECK(P->generator_count() == 2);
  CHECK(P->generator_name(0) == "s1");
  CHECK(P->generator_name(1) == "s2");
  CHECK(P->coxeter_entry(0, 1) == 0);
  const auto& s1 = P->generators()[0];
  const auto& s2 = P->generators()[1];
  CHECK(P->multiply(s1, s1) == P->identity());
  CHECK(P->length(P->from_word({0, 1, 0})) == 3);
  Element w = P->identity();
  for (int k = 1; k <= 10; ++k) {
    w = P->multiply(w, P->multiply(s1, s2));
    CHECK(P->length(w) == 2 * k);
  }
  for (int r = 0; r <= 12; ++r) CHECK(Ball(P, r).size() == 2 * r + 1);
  auto rw = P->reduced_word(P->from_word({1, 0, 1}));
  CHECK(rw.generators == std::vector<int>{1, 0, 1});
  CHECK(rw.omega == 0);
  CHECK(P->reduced_word(P->identity()).generators.empty());
}

TEST_CASE("length-zero subgroup orders") {
  for (int n = 2; n <= 5; ++n) CHECK(Presentation::make({Family::ExtendedAffineAPrime, n})->omega().size() == static_cast<std::size_t>(n));
  CHECK(Presentation::make({Family::ExtendedAffineB2, 2})->omega().size() == 2);
  CHECK(Presentation::make({Family::InfiniteDihedral, 1})->omega().size() == 1);
  CHECK_FALSE(Presentation::make({Family::ExtendedAffineA, 3})->omega_finite());
  CHECK_THROWS_AS(Ball(Presentation::make({Family::ExtendedAffineA, 3}), 2), std::domain_error);
}

TEST_CASE("B2 affine Coxeter matrix") {
  auto P = Presentation::make({Family::ExtendedAffineB2, 2});
  // s1, s2 finite; s0 affine (index 2)
  CHECK(P->coxeter_entry(0, 1) == 4);
  CHECK(P->coxeter_entry(2, 0) == 2);
  CHECK(P->coxeter_entry(2, 1) == 4);
  CHECK(P->positive_root_count() == 4);
  CHECK(P->finite_order() == 8);
}

TEST_CASE("omega generator permutes affine generators cyclically") {
  for (int n = 2; n <= 5; ++n) {
    auto P = Presentation::make({Family::ExtendedAffineAPrime, n});
    const auto& perm = P->omega_conjugation()[1];
    // one cycle through all n generators
    int s = 0, steps = 0;
    do {
      s = perm[static_cast<std::size_t>(s)];
      ++steps;
    } while (s != 0);
    CHECK(steps == n);
  }
  auto G = Presentation::make({Family::ExtendedAffineA, 3});
  const auto& perm = G->omega_conjugation()[0];
  int s = 0, steps = 0;
  do {
    s = perm[static_cast<std::size_t>(s)];
    ++steps;
  } while (s != 0);
  CHECK(steps == 3);
}

TEST_CASE("ball structure") {
  for (auto tag : affine_families()) {
    auto P = Presentation::make(tag);
    if (!P->omega_finite()) continue;
    const int radius = 6;
    Ball B(P, radius);
    std::set<Element> seen(B.elements().begin(), B.elements().end());
    CHECK(seen.size() == static_cast<std::size_t>(B.size()));
    for (int i = 0; i < B.size(); ++i) {
      const auto& x = B.element(i);
      CHECK(B.inverse(B.inverse(i)) == i);
      CHECK(B.length(B.inverse(i)) == B.length(i));
      for (int s = 0; s < P->generator_count(); ++s) {
        int l = P->length(P->multiply(x, P->generators()[static_cast<std::size_t>(s)]));
        CHECK(std::abs(l - B.length(i)) == 1);
      }
      for (int w = 0; w < B.omega_count(); ++w) {
        CHECK(B.left_omega(w, i) >= 0);
        CHECK(B.right_omega(w, i) >= 0);
        CHECK(B.length(B.right_omega(w, i)) == B.length(i));
      }
      auto rw = P->reduced_word(x);
      CHECK(static_cast<int>(rw.generators.size()) == B.length(i));
      CHECK(P->from_word(rw.generators, rw.omega) == x);
      CHECK(P->omega_part(x) == rw.omega);
    }
  }
}

TEST_CASE("weights are additive on length-additive pairs") {
  auto P = Presentation::make({Family::ExtendedAffineB2, 2}, {2, 1, 2});
  Ball B(P, 6);
  for (int i = 0; i < B.size(); ++i)
    for (int j = 0; j < B.size(); ++j) {
      if (B.length(i) + B.length(j) > 6) continue;
      int k = B.product(i, j);
      REQUIRE(k >= 0);
      if (B.length(k) == B.length(i) + B.length(j))
        CHECK(P->weighted_length(B.element(k)) == P->weighted_length(B.element(i)) + P->weighted_length(B.element(j)));
    }
  CHECK_THROWS_AS(Presentation::make({Family::ExtendedAffineAPrime, 3}, {1, 2, 1}), std::invalid_argument);
}

TEST_CASE("dump lines") {
  auto P = Presentation::make({Family::ExtendedAffineB2, 2});
  Ball B(P, 2);
  CHECK(B.dump_line(B.identity()) == "word=e omega=w0 len=0 trans=(0,0) fin=e");
  CHECK(B.dump().size() > 0);
}
