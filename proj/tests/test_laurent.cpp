#include "doctest.h"
#include "hx/laurent.hpp"

#include <random>

using namespace hx;

namespace {

LaurentZ random_z(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> c(-5, 5);
  LaurentZ p;
  for (int e = -deg; e <= deg; ++e) p += LaurentZ::monomial(c(rng), e);
  return p;
}

LaurentQ random_balanced(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> c(-7, 7);
  LaurentQ p;
  for (int e = 0; e <= deg; ++e) {
    Rational a(c(rng), 1 + (e % 3));
    p += LaurentQ::monomial(a, e);
    if (e) p += LaurentQ::monomial(a, -e);
  }
  return p;
}

// Plain schoolbook long division by t - t^-1, written independently of the
// library routine: multiply through by t to get polynomials in t.
LaurentQ oracle_divide(const LaurentQ& p) {
  if (p.is_zero()) return p;
  int low = p.valuation();
  std::vector<Rational> num;  // coefficients of t^(1-low) * p, ascending
  for (int e = low; e <= p.degree(); ++e) num.push_back(p.coeff(e));
  // divisor t^2 - 1 (ascending: -1, 0, 1)
  std::vector<Rational> q(num.size() >= 2 ? num.size() - 2 : 0);
  for (int i = static_cast<int>(num.size()) - 1; i >= 2; --i) {
    Rational lead = num[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - 2)] = lead;
    num[static_cast<std::size_t>(i)] -= lead;
    num[static_cast<std::size_t>(i - 2)] += lead;
  }
  for (auto& r : num) REQUIRE(r == 0);
  LaurentQ out;
  // p = (t^2 - 1) * sum q_k t^(k+low) * t^-1 ... rescale: t - t^-1 = t^-1 (t^2 - 1)
  for (std::size_t k = 0; k < q.size(); ++k) out += LaurentQ::monomial(q[k], static_cast<int>(k) + low + 1);
  return out;
}

}  // namespace

TEST_CASE("bar on monomials and sums") {
  CHECK(LaurentZ::var().bar() == LaurentZ::var(-1));
  LaurentZ p = LaurentZ::var(2) + LaurentZ::monomial(3, -1);
  CHECK(p.bar() == LaurentZ::var(-2) + LaurentZ::monomial(3, 1));
}

TEST_CASE("bar is an involutive ring map") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    LaurentZ p = random_z(rng, 8), q = random_z(rng, 8);
    CHECK(p.bar().bar() == p);
    CHECK((p * q).bar() == p.bar() * q.bar());
    CHECK((p + q).bar() == p.bar() + q.bar());
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
  }
}

TEST_CASE("canonical storage") {
  LaurentZ p = LaurentZ::var(3) - LaurentZ::var(3);
  CHECK(p.is_zero());
  CHECK(p == LaurentZ());
  LaurentZ a = LaurentZ::var(1) + LaurentZ::var(-4);
  LaurentZ b = LaurentZ::var(-4) + LaurentZ::var(1);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a.term_count() == 2);
}

TEST_CASE("text round trip") {
  LaurentZ p = LaurentZ::monomial(3, -2) + LaurentZ::var(1);
  CHECK(p.to_string() == "3*v^-2 + v");
  CHECK(parse_laurent_z("3*v^-2 + v") == p);
  CHECK(parse_laurent_z("-v^-1 - 2 + 5*v^4").to_string() == "-v^-1 - 2 + 5*v^4");
  LaurentQ q = parse_laurent_q("1/2*t - 1/2*t^-1");
  CHECK(q.to_string("t") == "-1/2*t^-1 + 1/2*t");
  CHECK_THROWS_AS(parse_laurent_z("3*v^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent_z(""), std::invalid_argument);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    LaurentZ r = random_z(rng, 6);
    CHECK(parse_laurent_z(r.to_string()) == r);
  }
}

TEST_CASE("decompose") {
  auto t = LaurentQ::var(1), ti = LaurentQ::var(-1);
  auto d1 = decompose(t + ti);
  CHECK(d1.balanced == t + ti);
  CHECK(d1.antibalanced.is_zero());
  auto d2 = decompose(t);
  CHECK(d2.balanced == (t + ti) * Rational(1, 2));
  CHECK(d2.antibalanced == (t - ti) * Rational(1, 2));
  auto d3 = decompose(LaurentQ::var(2) - LaurentQ::var(-2));
  CHECK(d3.balanced.is_zero());
  CHECK(d3.antibalanced == LaurentQ::var(2) - LaurentQ::var(-2));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    LaurentQ p = random_z(rng, 6).cast<Rational>();
    auto d = decompose(p);
    CHECK(d.balanced + d.antibalanced == p);
    CHECK(d.balanced.is_balanced());
    CHECK(d.antibalanced.is_antibalanced());
  }
}

TEST_CASE("divide_by_generator") {
  auto t = LaurentQ::var(1), ti = LaurentQ::var(-1);
  CHECK(divide_by_generator(t - ti) == LaurentQ(1));
  CHECK(divide_by_generator(LaurentQ::var(2) - LaurentQ::var(-2)) == t + ti);
  CHECK(oracle_divide(LaurentQ::var(2) - LaurentQ::var(-2)) == t + ti);
  CHECK(divide_by_generator(LaurentQ()).is_zero());
  CHECK_THROWS_AS(divide_by_generator(t), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    LaurentQ q = random_balanced(rng, 10);
    LaurentQ p = q * antibalanced_generator();
    LaurentQ r = divide_by_generator(p);
    CHECK(r == q);
    CHECK(r.is_balanced());
    CHECK(oracle_divide(p) == q);
  }
}

TEST_CASE("evaluate") {
  LaurentQ p = parse_laurent_q("v^-1 + 2 + 3*v^2");
  CHECK(p.evaluate(Rational(2)) == Rational(1, 2) + 2 + 12);
}
