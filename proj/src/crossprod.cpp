#include "hx/crossprod.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hx {

namespace {

LaurentQ one() { return LaurentQ::monomial(Rational(1), 0); }

LaurentQ half(const LaurentQ& p) { return p * LaurentQ::monomial(Rational(1, 2), 0); }

}  // namespace

// ---------------------------------------------------------------- crossed product

CrossedElement operator*(const CrossedElement& a, const CrossedElement& b) {
  return {a.p * b.p + a.q.bar() * b.q, a.p.bar() * b.q + a.q * b.p};
}

std::string CrossedElement::to_string() const {
  return "(" + p.to_string("t") + ") + alpha*(" + q.to_string("t") + ")";
}

CrossedElement random_crossed(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> ex(-max_degree, max_degree), co(-3, 3), nterms(0, 4);
  auto poly = [&] {
    LaurentQ f;
    for (int k = nterms(rng); k > 0; --k) f += LaurentQ::monomial(Rational(co(rng)), ex(rng));
    return f;
  };
  CrossedElement x;
  x.p = poly();
  x.q = poly();
  return x;
}

// ---------------------------------------------------------------- 2×2 matrices

Matrix2 Matrix2::identity() {
  Matrix2 m;
  m.a[0][0] = one();
  m.a[1][1] = one();
  return m;
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          x.a[static_cast<std::size_t>(i)][0] * y.a[0][static_cast<std::size_t>(j)] +
          x.a[static_cast<std::size_t>(i)][1] * y.a[1][static_cast<std::size_t>(j)];
  return r;
}

Matrix2 operator+(const Matrix2& x, const Matrix2& y) {
  Matrix2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r.a[i][j] = x.a[i][j] + y.a[i][j];
  return r;
}

bool Matrix2::in_block_pattern() const {
  return a[0][0].is_balanced() && a[1][1].is_balanced() && a[0][1].is_antibalanced() && a[1][0].is_antibalanced();
}

std::string Matrix2::to_string() const {
  return "[[" + a[0][0].to_string("t") + ", " + a[0][1].to_string("t") + "], [" + a[1][0].to_string("t") + ", " +
         a[1][1].to_string("t") + "]]";
}

Matrix2 matrix_realization(const CrossedElement& x) {
  const LaurentQ pb = half(x.p + x.p.bar()), pa = half(x.p - x.p.bar());
  const LaurentQ qb = half(x.q + x.q.bar()), qa = half(x.q - x.q.bar());
  Matrix2 m;
  m.a[0][0] = pb + qb;
  m.a[0][1] = pa + qa;
  m.a[1][0] = pa - qa;
  m.a[1][1] = pb - qb;
  return m;
}

SpectrumImage operator*(const SpectrumImage& x, const SpectrumImage& y) {
  return {x.m * y.m, x.at_plus_one * y.at_plus_one, x.at_minus_one * y.at_minus_one};
}

SpectrumImage spectrum_map(const Matrix2& m) {
  if (!m.in_block_pattern()) throw std::invalid_argument("matrix is not in the balanced / anti-balanced block pattern");
  SpectrumImage s;
  s.m.a[0][0] = m.a[0][0];
  s.m.a[1][1] = m.a[1][1];
  s.m.a[0][1] = m.a[0][1] * antibalanced_generator();
  s.m.a[1][0] = divide_by_generator(m.a[1][0]);
  s.at_plus_one = m.a[1][1].evaluate(Rational(1));
  s.at_minus_one = m.a[1][1].evaluate(Rational(-1));
  return s;
}

bool in_ideal_I(const Matrix2& m) {
  return m.a[1][1].evaluate(Rational(1)) == 0 && m.a[1][1].evaluate(Rational(-1)) == 0;
}

// ---------------------------------------------------------------- constrained 4×4 ring

namespace {

// (i,j) <-> partner with a_partner = bar(a_ij)
std::pair<int, int> partner(int i, int j) {
  if (i < 2 && j >= 2) return {i, 5 - j};
  if (i >= 2 && j < 2) return {5 - i, j};
  if (i >= 2 && j >= 2) return {5 - i, 5 - j};
  throw std::invalid_argument("top-left block entries are R(F) pairs");
}

}  // namespace

ConstrainedMatrix4::ConstrainedMatrix4() = default;

ConstrainedMatrix4 ConstrainedMatrix4::identity() {
  ConstrainedMatrix4 m;
  m.set_pair(0, 0, {one(), Rational(1)});
  m.set_pair(1, 1, {one(), Rational(1)});
  m.set_entry(2, 2, one());
  return m;
}

void ConstrainedMatrix4::set_pair(int i, int j, RFPair v) {
  if (!v.torus.is_balanced()) throw std::invalid_argument("R(F) entry must be balanced on the torus");
  pairs_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(v);
}

void ConstrainedMatrix4::set_entry(int i, int j, const LaurentQ& v) {
  auto [pi, pj] = partner(i, j);
  e_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
  e_[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)] = v.bar();
}

bool ConstrainedMatrix4::constraints_hold() const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!pair(i, j).torus.is_balanced()) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i < 2 && j < 2) continue;
      auto [pi, pj] = partner(i, j);
      if (entry(pi, pj) != entry(i, j).bar()) return false;
    }
  return true;
}

ConstrainedMatrix4 operator*(const ConstrainedMatrix4& a, const ConstrainedMatrix4& b) {
  // restriction to the torus C^× of every entry
  auto res = [](const ConstrainedMatrix4& m, int i, int j) -> const LaurentQ& {
    return i < 2 && j < 2 ? m.pair(i, j).torus : m.entry(i, j);
  };
  ConstrainedMatrix4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      LaurentQ s;
      for (int k = 0; k < 4; ++k) s += res(a, i, k) * res(b, k, j);
      if (i < 2 && j < 2) {
        // terms through Y = {3,4} are induced from C^× and vanish on α·C^×
        Rational al = a.pair(i, 0).alpha * b.pair(0, j).alpha + a.pair(i, 1).alpha * b.pair(1, j).alpha;
        c.pairs_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {s, al};
      } else {
        c.e_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
      }
    }
  return c;
}

std::string ConstrainedMatrix4::to_string() const {
  std::string out = "[";
  for (int i = 0; i < 4; ++i) {
    out += i ? "; " : "";
    for (int j = 0; j < 4; ++j) {
      out += j ? ", " : "";
      if (i < 2 && j < 2) out += "(" + pair(i, j).torus.to_string("t") + " | " + hx::to_string(pair(i, j).alpha) + ")";
      else out += entry(i, j).to_string("t");
    }
  }
  return out + "]";
}

ConstrainedMatrix4 psi_embed(const Rational& lambda, const CrossedElement& x) {
  ConstrainedMatrix4 m;
  m.set_pair(0, 0, {LaurentQ::monomial(lambda, 0), lambda});
  m.set_pair(1, 1, {LaurentQ::monomial(lambda, 0), lambda});
  m.set_entry(2, 2, x.p);
  m.set_entry(3, 2, x.q);
  return m;
}

// ---------------------------------------------------------------- evaluation

ModulePoint ModulePoint::parse(const std::string& s) {
  ModulePoint p;
  if (s == "alpha") {
    p.alpha_class = true;
    return p;
  }
  if (s.rfind("e(", 0) == 0 && s.back() == ')') {
    Rational r = parse_rational(s.substr(2, s.size() - 3));
    BigInt d = boost::multiprecision::denominator(r);
    if (d == 1) p.z = 1;
    else if (d == 2) p.z = -1;
    else throw std::invalid_argument("unsupported point label " + s + ": only roots of unity of order 1 or 2");
    return p;
  }
  p.z = parse_rational(s);
  if (p.z == 0) throw std::invalid_argument("z must be nonzero");
  return p;
}

std::string ModulePoint::label() const { return alpha_class ? "alpha" : to_string(z); }

QMatrix evaluate(const ConstrainedMatrix4& m, const ModulePoint& at) {
  QMatrix r(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i < 2 && j < 2) r(i, j) = at.alpha_class ? m.pair(i, j).alpha : m.pair(i, j).torus.evaluate(at.z);
      else r(i, j) = at.alpha_class ? Rational(0) : m.entry(i, j).evaluate(at.z);
    }
  return r;
}

QMatrix evaluate(const Matrix2& m, const Rational& z) {
  if (z == 0) throw std::invalid_argument("z must be nonzero");
  QMatrix r(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].evaluate(z);
  return r;
}

// ---------------------------------------------------------------- module decomposition

std::vector<int> ModuleDecomposition::simple_dims() const {
  std::vector<int> d;
  for (const auto& s : summands)
    if (!s.zero) d.push_back(s.dim);
  std::sort(d.rbegin(), d.rend());
  return d;
}

int ModuleDecomposition::zero_dim() const {
  int z = 0;
  for (const auto& s : summands)
    if (s.zero) z += s.dim;
  return z;
}

namespace {

// action of a on the invariant subspace with basis columns U
QMatrix restrict_to(const QMatrix& a, const QMatrix& U) {
  QMatrix aU = a * U;
  std::vector<std::vector<Rational>> cols;
  for (int j = 0; j < U.cols(); ++j) cols.push_back(solve(U, aU.column(j)));
  return QMatrix::from_columns(cols, U.cols());
}

QMatrix commutant(const std::vector<QMatrix>& basis, int k) {
  // X a = a X, unknowns X(r,c) at index r*k+c
  QMatrix sys(static_cast<int>(basis.size()) * k * k, k * k);
  int row = 0;
  for (const auto& a : basis)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j, ++row)
        for (int m = 0; m < k; ++m) {
          sys(row, i * k + m) += a(m, j);  // (X a)_{ij}
          sys(row, m * k + j) -= a(i, m);  // (a X)_{ij}
        }
  return kernel(sys);
}

QMatrix power(const QMatrix& m, int e) {
  QMatrix r = QMatrix::identity(m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

void split(const std::vector<QMatrix>& gens, const QMatrix& U, ModuleDecomposition& out) {
  const int k = U.cols();
  std::vector<QMatrix> local;
  for (const auto& g : gens) local.push_back(restrict_to(g, U));
  auto basis = algebra_span(local, false);
  Summand s;
  s.dim = k;
  s.basis = U;
  if (basis.empty()) {
    s.zero = true;
    out.summands.push_back(s);
    return;
  }
  if (static_cast<int>(basis.size()) == k * k) {
    s.simple = true;
    out.summands.push_back(s);
    return;
  }
  QMatrix C = commutant(basis, k);
  for (int c = 0; c < C.cols(); ++c) {
    QMatrix X(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) X(i, j) = C(i * k + j, c);
    for (const auto& lam : rational_roots(characteristic_polynomial(X))) {
      QMatrix N = power(X - lam * QMatrix::identity(k), k);
      QMatrix K = kernel(N);
      if (K.cols() == 0 || K.cols() == k) continue;
      // Fitting decomposition: kernel and image of N are complementary and invariant
      split(gens, U * K, out);
      split(gens, U * column_space(N), out);
      return;
    }
  }
  // indecomposable but not simple (or splitting needs irrational eigenvalues)
  out.complete = false;
  out.summands.push_back(s);
}

}  // namespace

ModuleDecomposition decompose_module(const std::vector<QMatrix>& generators, bool unital) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const int n = generators.front().rows();
  std::vector<QMatrix> gens = generators;
  if (unital) gens.push_back(QMatrix::identity(n));
  ModuleDecomposition out;
  out.ambient_dim = n;
  out.algebra_dim = static_cast<int>(algebra_span(gens, false).size());
  split(gens, QMatrix::identity(n), out);
  return out;
}

std::vector<ConstrainedMatrix4> constrained_generators() {
  std::vector<ConstrainedMatrix4> g{ConstrainedMatrix4::identity()};
  const std::vector<RFPair> pair_basis{{one(), Rational(0)}, {LaurentQ(), Rational(1)},
                                       {LaurentQ::var(1) + LaurentQ::var(-1), Rational(0)}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (const auto& p : pair_basis) {
        ConstrainedMatrix4 m;
        m.set_pair(i, j, p);
        g.push_back(m);
      }
  const std::vector<std::pair<int, int>> free_slots{{0, 2}, {1, 2}, {2, 0}, {2, 1}, {2, 2}, {2, 3}};
  for (auto [i, j] : free_slots)
    for (int e : {0, 1, -1}) {
      ConstrainedMatrix4 m;
      m.set_entry(i, j, LaurentQ::var(e));
      g.push_back(m);
    }
  return g;
}

std::vector<ConstrainedMatrix4> psi_generators(bool with_scalar) {
  std::vector<ConstrainedMatrix4> g;
  for (const auto& x : {CrossedElement::scalar(1), CrossedElement::t(1), CrossedElement::t(-1), CrossedElement::alpha()})
    g.push_back(psi_embed(0, x));
  if (with_scalar) g.push_back(psi_embed(1, CrossedElement{}));
  return g;
}

namespace {

ModuleDecomposition evaluate_all(const std::vector<ConstrainedMatrix4>& gens, const ModulePoint& at) {
  std::vector<QMatrix> m;
  for (const auto& g : gens) m.push_back(evaluate(g, at));
  return decompose_module(m, false);
}

}  // namespace

ModuleDecomposition evaluate_module(const ModulePoint& at) { return evaluate_all(constrained_generators(), at); }

ModuleDecomposition evaluate_psi_module(const ModulePoint& at) {
  if (at.alpha_class) throw std::invalid_argument("the crossed product is evaluated on the torus only");
  return evaluate_all(psi_generators(false), at);
}

ModuleDecomposition evaluate_crossed_module(const Rational& z) {
  std::vector<QMatrix> m;
  for (const auto& x : {CrossedElement::scalar(1), CrossedElement::t(1), CrossedElement::t(-1), CrossedElement::alpha()})
    m.push_back(evaluate(matrix_realization(x), z));
  return decompose_module(m, false);
}

}  // namespace hx
