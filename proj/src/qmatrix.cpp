#include "hx/qmatrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hx {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<std::vector<Rational>>& cols, int rows) {
  QMatrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return m;
}

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

std::vector<Rational> QMatrix::column(int j) const {
  std::vector<Rational> c(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
  return c;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix size mismatch");
  QMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + Rational(-1) * b; }

QMatrix operator*(const Rational& s, const QMatrix& a) {
  QMatrix c = a;
  for (auto& x : c.a_) x *= s;
  return c;
}

std::string QMatrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    for (int j = 0; j < cols_; ++j) out += (j ? " " : "") + hx::to_string((*this)(i, j));
  }
  return out + "]";
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (int j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const QMatrix& m) {
  QMatrix w = m;
  return static_cast<int>(rref(w).size());
}

QMatrix kernel(const QMatrix& m) {
  QMatrix w = m;
  auto piv = rref(w);
  std::vector<char> is_piv(static_cast<std::size_t>(m.cols()), 0);
  for (int p : piv) is_piv[static_cast<std::size_t>(p)] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> x(static_cast<std::size_t>(m.cols()));
    x[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[static_cast<std::size_t>(piv[r])] = -w(static_cast<int>(r), f);
    basis.push_back(x);
  }
  return QMatrix::from_columns(basis, m.cols());
}

QMatrix column_space(const QMatrix& m) {
  QMatrix w = m;
  auto piv = rref(w);
  std::vector<std::vector<Rational>> cols;
  for (int p : piv) cols.push_back(m.column(p));
  return QMatrix::from_columns(cols, m.rows());
}

std::vector<Rational> solve(const QMatrix& m, const std::vector<Rational>& b) {
  QMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[static_cast<std::size_t>(i)];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) throw std::invalid_argument("inconsistent linear system");
  std::vector<Rational> x(static_cast<std::size_t>(m.cols()));
  for (std::size_t r = 0; r < piv.size(); ++r) x[static_cast<std::size_t>(piv[r])] = aug(static_cast<int>(r), m.cols());
  return x;
}

std::vector<QMatrix> span_basis(const std::vector<QMatrix>& ms) {
  std::vector<QMatrix> out;
  if (ms.empty()) return out;
  const int n = ms.front().rows() * ms.front().cols();
  QMatrix rows(0, n);
  for (const auto& m : ms) {
    QMatrix trial(rows.rows() + 1, n);
    for (int i = 0; i < rows.rows(); ++i)
      for (int j = 0; j < n; ++j) trial(i, j) = rows(i, j);
    auto f = m.flatten();
    for (int j = 0; j < n; ++j) trial(rows.rows(), j) = f[static_cast<std::size_t>(j)];
    if (rank(trial) > rows.rows()) {
      rows = trial;
      out.push_back(m);
    }
  }
  return out;
}

std::vector<QMatrix> algebra_span(const std::vector<QMatrix>& gens, bool unital) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  std::vector<QMatrix> all = gens;
  if (unital) all.push_back(QMatrix::identity(gens.front().rows()));
  auto basis = span_basis(all);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::vector<QMatrix> grown = basis;
    for (const auto& g : gens) grown.push_back(basis[i] * g);
    auto next = span_basis(grown);
    if (next.size() > basis.size()) {
      basis = next;
      i = static_cast<std::size_t>(-1);  // restart: new elements must be multiplied too
    }
  }
  return basis;
}

std::vector<Rational> characteristic_polynomial(const QMatrix& m) {
  // Faddeev-LeVerrier
  const int n = m.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  QMatrix M(n, n);
  for (int k = 1; k <= n; ++k) {
    M = m * M + c[static_cast<std::size_t>(n - k + 1)] * QMatrix::identity(n);
    QMatrix AM = m * M;
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += AM(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / k;
  }
  return c;
}

namespace {

std::vector<BigInt> divisors(BigInt x) {
  if (x < 0) x = -x;
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= x; ++d)
    if (x % d == 0) {
      out.push_back(d);
      if (d * d != x) out.push_back(x / d);
    }
  return out;
}

Rational horner(const std::vector<Rational>& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& poly) {
  std::vector<Rational> p = poly;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.size() <= 1) return {};
  std::set<Rational> roots;
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  std::vector<Rational> q(p.begin() + static_cast<std::ptrdiff_t>(low), p.end());
  if (q.size() > 1) {
    BigInt l = 1;
    for (const auto& c : q) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    std::vector<BigInt> z;
    for (const auto& c : q) z.push_back(boost::multiprecision::numerator(Rational(c * l)));
    for (const auto& a : divisors(z.front()))
      for (const auto& b : divisors(z.back()))
        for (int sign : {1, -1}) {
          Rational r(a * sign, b);
          if (horner(q, r) == 0) roots.insert(r);
        }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace hx
