#pragma once

// Dense matrices over Q for the small module computations.

#include "hx/rational.hpp"

#include <string>
#include <vector>

namespace hx {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  static QMatrix identity(int n);
  static QMatrix from_columns(const std::vector<std::vector<Rational>>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  bool is_zero() const;
  std::vector<Rational> column(int j) const;
  std::vector<Rational> flatten() const { return a_; }
  QMatrix transpose() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& s, const QMatrix& a);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

int rank(const QMatrix& m);
// basis of {x : m x = 0} as columns
QMatrix kernel(const QMatrix& m);
// basis of the column space, as columns
QMatrix column_space(const QMatrix& m);
// x with m x = b; throws std::invalid_argument when inconsistent
std::vector<Rational> solve(const QMatrix& m, const std::vector<Rational>& b);

// a linearly independent subset spanning the same space as the given matrices
std::vector<QMatrix> span_basis(const std::vector<QMatrix>& ms);
// closure of the generators under products; includes the identity when unital
std::vector<QMatrix> algebra_span(const std::vector<QMatrix>& gens, bool unital);

// coefficients c_0..c_n of det(xI - m), c_n = 1
std::vector<Rational> characteristic_polynomial(const QMatrix& m);
// distinct rational roots, ascending
std::vector<Rational> rational_roots(const std::vector<Rational>& poly);

}  // namespace hx
