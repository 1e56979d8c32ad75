#pragma once

// Small dense integer matrices and the Smith normal form.

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace hx {

using IntVector = std::vector<std::int64_t>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int n);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  IntMatrix transpose() const;
  IntVector column(int j) const;
  IntVector apply(const IntVector& x) const;  // this * x
  bool is_identity() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> a_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// D = U * A * V with U, V unimodular and D diagonal, d_0 | d_1 | ... , d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  IntVector invariants;  // nonzero diagonal entries, in order
  int rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

std::int64_t determinant(const IntMatrix& a);

// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

// Z-basis (as columns) of {x in Z^n : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

// Whether x lies in the Z-span of the columns of B.
bool in_column_lattice(const IntMatrix& b, const IntVector& x);

std::int64_t gcd_all(const IntVector& v);

}  // namespace hx
