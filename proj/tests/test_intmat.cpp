#include "doctest.h"
#include "hx/intmat.hpp"

#include <random>

using namespace hx;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c) {
  std::uniform_int_distribution<int> d(-4, 4);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form reconstructs and divides") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 300; ++k) {
    int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
    IntMatrix a = random_matrix(rng, r, c);
    SmithForm f = smith_normal_form(a);
    CHECK(f.U * a * f.V == f.D);
    CHECK(std::abs(determinant(f.U)) == 1);
    CHECK(std::abs(determinant(f.V)) == 1);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(f.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < f.invariants.size(); ++i) CHECK(f.invariants[i + 1] % f.invariants[i] == 0);
    for (auto d : f.invariants) CHECK(d > 0);
  }
}

TEST_CASE("known invariants") {
  IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  SmithForm f = smith_normal_form(a);
  CHECK(f.invariants == IntVector{2, 6, 12});
  // coroots of B2 on Z^2: (1,-1), (0,2) -> cokernel Z/2
  IntMatrix b = IntMatrix::from_columns({{1, -1}, {0, 2}}, 2);
  CHECK(smith_normal_form(b).invariants == IntVector{1, 2});
}

TEST_CASE("determinant and inverse") {
  IntMatrix a{{2, 1}, {7, 4}};
  CHECK(determinant(a) == 1);
  CHECK(unimodular_inverse(a) * a == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
}

TEST_CASE("kernel and lattice membership") {
  IntMatrix a{{1, 1, 0}, {0, 0, 0}};
  IntMatrix k = integer_kernel(a);
  CHECK(k.cols() == 2);
  for (int j = 0; j < k.cols(); ++j) CHECK(a.apply(k.column(j)) == IntVector{0, 0});
  IntMatrix b = IntMatrix::from_columns({{2, 0}, {0, 3}}, 2);
  CHECK(in_column_lattice(b, {4, 3}));
  CHECK_FALSE(in_column_lattice(b, {1, 3}));
  CHECK(gcd_all({4, 6, 10}) == 2);
}
