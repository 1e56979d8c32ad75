#include "doctest.h"
#include "hx/hecke.hpp"

#include <set>

using namespace hx;

namespace {

std::shared_ptr<const Ball> make_ball(FamilyTag tag, int radius, std::vector<int> weights = {}) {
  return std::make_shared<Ball>(Presentation::make(tag, std::move(weights)), radius);
}

const FamilyTag kInf{Family::InfiniteDihedral, 1};
const FamilyTag kSO5{Family::ExtendedAffineB2, 2};

// Bruhat order for the infinite dihedral group: y <= w iff ℓ(y) <= ℓ(w), except
// that two distinct elements of equal length are incomparable.
bool dihedral_bruhat_le(const Ball& B, int y, int w) { return y == w || B.length(y) < B.length(w); }

bool bar_invariant(const KLBasis& kl, const Terms& c) {
  // bar(T_{s1}...T_{sk}T_ω) = T_{s1}^-1 ... T_{sk}^-1 T_ω with T_s^-1 = T_s - (v_s - v_s^-1)
  const Ball& B = kl.ball();
  const auto& P = B.presentation();
  Accumulator acc(kl.size());
  for (const auto& [y, py] : c) {
    auto rw = P.reduced_word(B.element(y));
    Terms h{{B.omega_index(rw.omega), LaurentZ(1)}};
    for (auto it = rw.generators.rbegin(); it != rw.generators.rend(); ++it) {
      Accumulator t(kl.size());
      t.add_terms(kl.t_left_gen(*it, h), LaurentZ(1));
      t.add_terms(h, -(kl.v_s(*it) - kl.v_s(*it).bar()));
      h = t.take();
    }
    acc.add_terms(h, py.bar());
  }
  return acc.take() == c;
}

}  // namespace

TEST_CASE("quadratic relation and length-additive products") {
  auto B = make_ball(kInf, 6);
  KLBasis kl(B);
  int s = B->left_gen(0, B->identity());
  auto ss = kl.mul_T(kl.T(s), kl.T(s));
  HeckeElement expect{Basis::T, {{B->identity(), LaurentZ(1)}, {s, LaurentZ::var(1) - LaurentZ::var(-1)}}};
  std::sort(expect.terms.begin(), expect.terms.end(), [](auto& a, auto& b) { return a.first < b.first; });
  CHECK(ss == expect);
  for (int x = 0; x < B->size(); ++x)
    for (int y = 0; y < B->size(); ++y) {
      int xy = B->product(x, y);
      if (xy < 0 || B->length(xy) != B->length(x) + B->length(y)) continue;
      CHECK(kl.mul_T(kl.T(x), kl.T(y)) == kl.T(xy));
    }
}

TEST_CASE("boundedness of f on the infinite dihedral group") {
  auto B = make_ball(kInf, 6);
  KLBasis kl(B);
  for (int x = 0; x < B->size(); ++x)
    for (int y = 0; y < B->size(); ++y) {
      if (B->length(x) + B->length(y) > 6) continue;
      for (const auto& [z, f] : kl.mul_T(kl.T(x), kl.T(y)).terms) CHECK(f.degree() <= 1);
    }
  CHECK_THROWS_AS(kl.mul_T(kl.T(B->size() - 1), kl.T(B->size() - 2)), BallOverflow);
}

TEST_CASE("closed form for the infinite dihedral KL basis") {
  auto B = make_ball(kInf, 10);
  KLBasis kl(B);
  REQUIRE(B->size() == 21);
  for (int w = 0; w < B->size(); ++w) {
    Terms expect;
    for (int y = 0; y < B->size(); ++y)
      if (dihedral_bruhat_le(*B, y, w)) expect.emplace_back(y, LaurentZ::var(B->length(y) - B->length(w)));
    CHECK(kl.c(w) == expect);
    CHECK(bar_invariant(kl, kl.c(w)));
  }
  int s = B->left_gen(0, B->identity());
  CHECK(kl.c(s) == Terms{{B->identity(), LaurentZ::var(-1)}, {s, LaurentZ(1)}});
}

TEST_CASE("KL basis properties on SO(5) and PGL(3)") {
  for (auto [tag, r] : {std::pair{kSO5, 6}, std::pair{FamilyTag{Family::ExtendedAffineAPrime, 3}, 5}}) {
    auto B = make_ball(tag, r);
    KLBasis kl(B);
    for (int w = 0; w < B->size(); ++w) {
      const auto& cw = kl.c(w);
      CHECK(kl.p(w, w) == LaurentZ(1));
      for (const auto& [y, py] : cw) {
        CHECK(B->omega_part(y) == B->omega_part(w));
        if (y != w) {
          CHECK(B->length(y) < B->length(w));
          CHECK(py.degree() < 0);
        }
      }
      CHECK(bar_invariant(kl, cw));
    }
  }
}

TEST_CASE("W-graph shortcut agrees with expansion") {
  auto B = make_ball(kSO5, 6);
  KLBasis kl(B);
  for (int s = 0; s < B->presentation().generator_count(); ++s)
    for (int w = 0; w < B->size(); ++w)
      for (bool left : {true, false}) {
        if (left ? kl.left_descent(s, w) : kl.right_descent(s, w)) continue;
        if ((left ? B->left_gen(s, w) : B->right_gen(s, w)) < 0) continue;
        const auto& mu = left ? kl.mu_left(s, w) : kl.mu_right(s, w);
        REQUIRE(mu.has_value());
        CHECK(*mu == kl.mu_by_expansion(s, w, left));
      }
}

TEST_CASE("h-constants: row recursion matches T-basis expansion") {
  for (auto [tag, r] : {std::pair{kInf, 8}, std::pair{kSO5, 6}}) {
    auto B = make_ball(tag, r);
    KLBasis kl(B);
    for (int y = 0; y < B->size(); ++y) {
      kl.for_each_h_row(y, r - B->length(y), [&](int x, const Terms& h) {
        if ((x + y) % 3 != 0 && tag.family == Family::ExtendedAffineB2) return;
        CHECK(h == kl.h_constants(x, y).terms);
      });
    }
  }
}

TEST_CASE("h-constants basics") {
  auto B = make_ball(kInf, 6);
  KLBasis kl(B);
  int e = B->identity();
  int s1 = B->left_gen(0, e);
  for (int y = 0; y < B->size(); ++y) CHECK(kl.h_constants(e, y).terms == Terms{{y, LaurentZ(1)}});
  CHECK(kl.h_constants(s1, s1).terms == Terms{{s1, LaurentZ::var(1) + LaurentZ::var(-1)}});
  auto d = kl.delta_and_sign(s1);
  REQUIRE(d);
  CHECK(d->first == 1);
  CHECK(d->second == 1);
  CHECK(kl.delta_and_sign(e)->first == 0);
}

TEST_CASE("unequal parameters on the infinite dihedral group") {
  auto B = make_ball(kInf, 6, {1, 2});
  KLBasis kl(B);
  for (int w = 0; w < B->size(); ++w) {
    CHECK(bar_invariant(kl, kl.c(w)));
    for (const auto& [y, py] : kl.c(w))
      if (y != w) CHECK(py.degree() < 0);
  }
  for (int y = 0; y < B->size(); ++y)
    kl.for_each_h_row(y, 6 - B->length(y), [&](int x, const Terms& h) { CHECK(h == kl.h_constants(x, y).terms); });
}

TEST_CASE("a-function, distinguished involutions and cells: infinite dihedral") {
  auto B = make_ball(kInf, 10);
  KLBasis kl(B);
  AFunction a = compute_a_function(kl, 3);
  int e = B->identity();
  CHECK(a.value[static_cast<std::size_t>(e)] == 0);
  CHECK(a.is_certified(e));
  for (int z = 0; z < B->size(); ++z) {
    if (B->length(z) > 4) {
      CHECK_FALSE(a.is_certified(z));
      continue;
    }
    CHECK(a.is_certified(z));
    if (z != e) CHECK(a.value[static_cast<std::size_t>(z)] == 1);
  }
  CellPartition cells = compute_cells(kl, a);
  CHECK(cells.two_sided_cells.size() == 2);
  CHECK(cells.certified_two_sided().size() == 2);
  CHECK(cells.left_cells.size() == 3);
  std::set<std::string> D;
  for (int d : cells.distinguished) D.insert(B->label(d));
  CHECK(D == std::set<std::string>{"e", "s1", "s2"});
  for (auto n : cells.n_sign) CHECK(n == 1);
  HTable h(kl, 10);
  for (const auto& r : check_properties(kl, a, h, cells)) {
    INFO(r.name);
    CHECK(r.pass);
    CHECK(r.checked > 0);
  }
}

TEST_CASE("serialization round trip") {
  auto B = make_ball(kSO5, 5);
  KLBasis kl(B);
  std::string text = kl.serialize();
  auto back = KLBasis::deserialize(B, text);
  CHECK(back->serialize() == text);
  for (int w = 0; w < B->size(); ++w) CHECK(back->c(w) == kl.c(w));
  CHECK_THROWS(KLBasis::deserialize(make_ball(kSO5, 4), text));
}

TEST_CASE("h-constant table round trip") {
  auto B = make_ball(kSO5, 5);
  KLBasis kl(B);
  HTable h(kl, 5);
  std::string text = h.serialize();
  HTable back = HTable::deserialize(kl, text);
  CHECK(back.serialize() == text);
  CHECK(back.max_total() == 5);
  for (int x = 0; x < B->size(); ++x)
    for (int y = 0; y < B->size(); ++y) {
      REQUIRE(back.has(x, y) == h.has(x, y));
      if (h.has(x, y)) CHECK(back.row(x, y) == h.row(x, y));
    }
  CHECK_THROWS(HTable::deserialize(kl, "# hx h-constants bogus max_total=3\n"));
  std::string truncated = text.substr(0, text.find('\n', text.size() / 2));
  CHECK_THROWS(HTable::deserialize(kl, truncated));
}
