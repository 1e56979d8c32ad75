#pragma once

// The crossed product M ⋊ Z/2 (M = C[t,t^-1], α t = t^-1 α), its 2×2 matrix
// realization, the map to M_2(L) ⊕ C ⊕ C, the constrained 4×4 matrix ring
// modelling K_F(Y×Y) for F = Z/2 ⋉ C^×, the embedding ψ and evaluation
// modules.

#include "hx/laurent.hpp"
#include "hx/qmatrix.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

namespace hx {

// p + α·q
struct CrossedElement {
  LaurentQ p;
  LaurentQ q;

  static CrossedElement scalar(const Rational& c) { return {LaurentQ::monomial(c, 0), {}}; }
  static CrossedElement t(int k = 1) { return {LaurentQ::var(k), {}}; }
  static CrossedElement alpha() { return {{}, LaurentQ::monomial(Rational(1), 0)}; }

  friend CrossedElement operator*(const CrossedElement& a, const CrossedElement& b);
  friend CrossedElement operator+(const CrossedElement& a, const CrossedElement& b) { return {a.p + b.p, a.q + b.q}; }
  friend bool operator==(const CrossedElement&, const CrossedElement&) = default;
  std::string to_string() const;
};

// random element with exponents in [-max_degree, max_degree] and small integer coefficients
CrossedElement random_crossed(std::mt19937_64& rng, int max_degree);

struct Matrix2 {
  std::array<std::array<LaurentQ, 2>, 2> a;
  static Matrix2 identity();
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend Matrix2 operator+(const Matrix2& x, const Matrix2& y);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
  // diagonal balanced, off-diagonal anti-balanced
  bool in_block_pattern() const;
  std::string to_string() const;
};

// t ↦ [[(t+t^-1)/2, (t-t^-1)/2], [(t-t^-1)/2, (t+t^-1)/2]], α ↦ diag(1,-1)
Matrix2 matrix_realization(const CrossedElement& x);

struct SpectrumImage {
  Matrix2 m;  // entries balanced
  Rational at_plus_one;
  Rational at_minus_one;
  friend SpectrumImage operator*(const SpectrumImage& x, const SpectrumImage& y);
  friend bool operator==(const SpectrumImage&, const SpectrumImage&) = default;
};

// x12 ↦ x12 (t - t^-1), x21 ↦ x21 / (t - t^-1), x22 evaluated at ±1.
// Throws std::invalid_argument when the block pattern is violated.
SpectrumImage spectrum_map(const Matrix2& m);
// x22(1) = 0 = x22(-1)
bool in_ideal_I(const Matrix2& m);

// class function on Z/2 ⋉ C^×: balanced Laurent on {z, z^-1}, scalar on α·C^×
struct RFPair {
  LaurentQ torus;
  Rational alpha;
  friend bool operator==(const RFPair&, const RFPair&) = default;
};

class ConstrainedMatrix4 {
 public:
  ConstrainedMatrix4();  // zero
  static ConstrainedMatrix4 identity();

  // i, j in 0..1
  const RFPair& pair(int i, int j) const { return pairs_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  void set_pair(int i, int j, RFPair v);
  // entries outside the top-left block, i or j in 2..3
  const LaurentQ& entry(int i, int j) const { return e_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  // sets (i,j) and its constrained partner
  void set_entry(int i, int j, const LaurentQ& v);

  bool constraints_hold() const;
  friend ConstrainedMatrix4 operator*(const ConstrainedMatrix4& a, const ConstrainedMatrix4& b);
  friend bool operator==(const ConstrainedMatrix4&, const ConstrainedMatrix4&) = default;

  std::string to_string() const;

 private:
  std::array<std::array<RFPair, 2>, 2> pairs_;
  std::array<std::array<LaurentQ, 4>, 4> e_;  // top-left block unused
};

// (λ, p + α q) ↦ diag(λ, λ) ⊕ [[p, bar q], [q, bar p]]
ConstrainedMatrix4 psi_embed(const Rational& lambda, const CrossedElement& x);

// where entries are evaluated
struct ModulePoint {
  bool alpha_class = false;
  Rational z = 1;
  // "alpha", a nonzero rational, or a root of unity label "e(k/m)" with m ≤ 2
  static ModulePoint parse(const std::string& s);
  std::string label() const;
};

QMatrix evaluate(const ConstrainedMatrix4& m, const ModulePoint& at);
QMatrix evaluate(const Matrix2& m, const Rational& z);

struct Summand {
  int dim = 0;
  bool zero = false;    // the algebra acts by 0
  bool simple = false;  // Burnside: restricted algebra is all of End
  QMatrix basis;        // columns in the ambient space
};

struct ModuleDecomposition {
  int ambient_dim = 0;
  int algebra_dim = 0;
  std::vector<Summand> summands;
  bool complete = true;         // every non-zero summand certified simple
  std::vector<int> simple_dims() const;  // descending
  int zero_dim() const;
};

// Direct-sum decomposition of Q^n under the algebra spanned by the generators.
ModuleDecomposition decompose_module(const std::vector<QMatrix>& generators, bool unital);

// finite generating set of the constrained ring, resp. of C ⊕ (M ⋊ Z/2) through ψ
std::vector<ConstrainedMatrix4> constrained_generators();
std::vector<ConstrainedMatrix4> psi_generators(bool with_scalar);

ModuleDecomposition evaluate_module(const ModulePoint& at);
// the crossed product acting on C^4 through ψ(0, ·)
ModuleDecomposition evaluate_psi_module(const ModulePoint& at);
// the crossed product acting on C^2 through the matrix realization
ModuleDecomposition evaluate_crossed_module(const Rational& z);

}  // namespace hx
