#include "hx/intmat.hpp"

#include "hx/rational.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hx {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, int rows) {
  IntMatrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[static_cast<std::size_t>(j)].size()) != rows) throw std::invalid_argument("column size mismatch");
    for (int i = 0; i < rows; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::column(int j) const {
  IntVector c(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
  return c;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  IntVector y(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < cols_; ++j) s = checked_add(s, checked_mul((*this)(i, j), x[static_cast<std::size_t>(j)]));
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

bool IntMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
    }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference size mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << ";";
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << m.to_string(); }

namespace {

void swap_rows(IntMatrix& m, int r1, int r2) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}
void swap_cols(IntMatrix& m, int c1, int c2) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, c1), m(i, c2));
}
// row r2 -= f * row r1
void add_row(IntMatrix& m, int r1, int r2, std::int64_t f) {
  for (int j = 0; j < m.cols(); ++j) m(r2, j) = checked_add(m(r2, j), -checked_mul(f, m(r1, j)));
}
void add_col(IntMatrix& m, int c1, int c2, std::int64_t f) {
  for (int i = 0; i < m.rows(); ++i) m(i, c2) = checked_add(m(i, c2), -checked_mul(f, m(i, c1)));
}
void negate_row(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  SmithForm f{IntMatrix::identity(m), IntMatrix::identity(n), a, {}, 0};
  IntMatrix& D = f.D;
  int t = 0;
  while (t < std::min(m, n)) {
    // pivot: smallest nonzero |entry| in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (D(i, j) != 0 && (pi < 0 || std::abs(D(i, j)) < std::abs(D(pi, pj)))) { pi = i; pj = j; }
    if (pi < 0) break;
    swap_rows(D, t, pi); swap_rows(f.U, t, pi);
    swap_cols(D, t, pj); swap_cols(f.V, t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < m; ++i) {
        std::int64_t q = D(i, t) / D(t, t);
        if (q) { add_row(D, t, i, q); add_row(f.U, t, i, q); }
        if (D(i, t) != 0) {
          swap_rows(D, t, i); swap_rows(f.U, t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        std::int64_t q = D(t, j) / D(t, t);
        if (q) { add_col(D, t, j, q); add_col(f.V, t, j, q); }
        if (D(t, j) != 0) {
          swap_cols(D, t, j); swap_cols(f.V, t, j);
          clean = false;
        }
      }
      if (clean) {
        // divisibility: pivot must divide every remaining entry
        for (int i = t + 1; i < m && clean; ++i)
          for (int j = t + 1; j < n && clean; ++j)
            if (D(i, j) % D(t, t) != 0) {
              // fold row i into row t and redo
              for (int k = t; k < n; ++k) D(t, k) = checked_add(D(t, k), D(i, k));
              for (int k = 0; k < m; ++k) f.U(t, k) = checked_add(f.U(t, k), f.U(i, k));
              clean = false;
            }
      }
    }
    if (D(t, t) < 0) { negate_row(D, t); negate_row(f.U, t); }
    f.invariants.push_back(D(t, t));
    ++t;
  }
  f.rank = t;
  return f;
}

std::int64_t determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = a.rows();
  // Bareiss fraction-free elimination
  IntMatrix m = a;
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      swap_rows(m, k, r);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (checked_mul(m(i, j), m(k, k)) - checked_mul(m(i, k), m(k, j))) / prev;
    prev = m(k, k);
  }
  return n == 0 ? 1 : sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  SmithForm f = smith_normal_form(a);
  if (f.rank != a.rows()) throw std::invalid_argument("matrix is singular");
  for (auto d : f.invariants)
    if (d != 1) throw std::invalid_argument("matrix is not unimodular");
  // D = U A V = I  =>  A^-1 = V U
  return f.V * f.U;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  const int n = a.cols();
  IntMatrix k(n, n - f.rank);
  for (int j = f.rank; j < n; ++j)
    for (int i = 0; i < n; ++i) k(i, j - f.rank) = f.V(i, j);
  return k;
}

bool in_column_lattice(const IntMatrix& b, const IntVector& x) {
  SmithForm f = smith_normal_form(b);
  IntVector y = f.U.apply(x);
  for (int i = 0; i < static_cast<int>(y.size()); ++i) {
    std::int64_t yi = y[static_cast<std::size_t>(i)];
    if (i < f.rank) {
      if (yi % f.invariants[static_cast<std::size_t>(i)] != 0) return false;
    } else if (yi != 0) {
      return false;
    }
  }
  return true;
}

std::int64_t gcd_all(const IntVector& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace hx
