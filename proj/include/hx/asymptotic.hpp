#pragma once

// The based ring J with t_x t_y = Σ γ_{x,y,z^-1} t_z, its cell ideals, the
// homomorphism φ_q on the c†-basis and the graded bimodules H^i.

#include "hx/hecke.hpp"
#include "hx/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hx {

using JElement = std::map<int, Rational>;  // ball index -> coefficient of t_w

class UncertifiedSupport : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of H^i = H^{≥i}/H^{≥i+1} in the basis [c†_w], a(w) = i.
struct GradedElement {
  int grade = 0;
  std::map<int, Rational> terms;
  friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

// v with v^2 = q; throws std::invalid_argument unless q is the square of a nonzero rational.
Rational sqrt_q(const Rational& q);

void add_to(JElement& acc, int w, const Rational& c);
std::string to_string(const JElement& j, const Ball& ball);

class AsymptoticRing {
 public:
  AsymptoticRing(const HTable& h, const AFunction& a, const CellPartition& cells);

  const Ball& ball() const { return kl_.ball(); }
  const KLBasis& kl() const { return kl_; }
  const AFunction& a() const { return a_; }
  const CellPartition& cells() const { return cells_; }

  bool certified(int w) const { return a_.is_certified(w); }
  int a_value(int w) const;  // throws UncertifiedSupport

  JElement basis(int x) const { return {{x, Rational(1)}}; }
  // t_x t_y; throws UncertifiedSupport when a coefficient cannot be determined.
  JElement basis_product(int x, int y) const;
  JElement mul(const JElement& p, const JElement& q) const;
  JElement unit() const;  // Σ_{d∈𝒟} t_d

  std::vector<int> cell_ideal(int cell) const;
  JElement cell_unit(int cell) const;

  std::int64_t n_hat(int z) const;  // throws UncertifiedSupport

  // φ(c†_x) with A specialized at v; and its A-linear extension to Σ a_x c†_x.
  JElement phi_basis(int x, const Rational& v) const;
  JElement phi(const HeckeElement& dagger_coeffs, const Rational& v) const;

  // bimodule action of J on H^i
  GradedElement star_left(const JElement& j, const GradedElement& f) const;
  GradedElement star_right(const GradedElement& f, const JElement& j) const;
  // left / right multiplication by Σ a_x c†_x, specialized at v, projected to grade f.grade
  GradedElement hecke_left(const HeckeElement& h, const GradedElement& f, const Rational& v) const;
  GradedElement hecke_right(const GradedElement& f, const HeckeElement& h, const Rational& v) const;
  GradedElement f_i(int i) const;
  std::vector<int> grade_basis(int i) const;  // certified w with a(w) = i

 private:
  const Terms& row(int x, int y) const;  // throws UncertifiedSupport
  GradedElement project(int grade, const Terms& row, const Rational& v, const Rational& scale) const;

  const KLBasis& kl_;
  const HTable& h_;
  const AFunction& a_;
  const CellPartition& cells_;
};

struct CheckOutcome {
  bool pass = true;
  long checked = 0;
  long skipped = 0;
  std::vector<std::string> witnesses;
  void fail(const std::string& w) {
    pass = false;
    if (witnesses.size() < 5) witnesses.push_back(w);
  }
};

// T_{t_λ}^k + T_{t_λ}^{-k} for the translation t_λ generating the coroot lattice
// direction of the infinite dihedral group (T-basis).
HeckeElement bernstein_central(const KLBasis& kl, int k);

// Commutation with every T_s and T_ω; witness names the first failing generator.
CheckOutcome check_central(const KLBasis& kl, const HeckeElement& z);

// φ_q(z†)·t_x = t_x·φ_q(z†) for every x where both sides are computable.
// Fails immediately (witness) if z is not central.
CheckOutcome center_commutation_check(const AsymptoticRing& J, const HeckeElement& z_T, const Rational& q);

}  // namespace hx
