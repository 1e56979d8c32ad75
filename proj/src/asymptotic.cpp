#include "hx/asymptotic.hpp"

#include <algorithm>
#include <sstream>

namespace hx {

Rational sqrt_q(const Rational& q) {
  if (q <= 0) throw std::invalid_argument("q must be positive");
  BigInt num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
  BigInt rn = boost::multiprecision::sqrt(num), rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) throw std::invalid_argument("q = " + to_string(q) + " is not the square of a rational");
  return Rational(rn, rd);
}

void add_to(JElement& acc, int w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = acc.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

namespace {

Rational at(const LaurentZ& p, const Rational& v) { return p.evaluate<Rational>(v); }

}  // namespace

std::string to_string(const JElement& j, const Ball& ball) {
  if (j.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : j) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*t[" + ball.label(w) + "]";
  }
  return out;
}

AsymptoticRing::AsymptoticRing(const HTable& h, const AFunction& a, const CellPartition& cells)
    : kl_(h.kl()), h_(h), a_(a), cells_(cells) {}

int AsymptoticRing::a_value(int w) const {
  if (!a_.is_certified(w)) throw UncertifiedSupport("a-value of " + ball().label(w) + " is not certified");
  return a_.value[static_cast<std::size_t>(w)];
}

const Terms& AsymptoticRing::row(int x, int y) const {
  if (!h_.has(x, y))
    throw UncertifiedSupport("product c_" + ball().label(x) + " c_" + ball().label(y) + " lies outside the computed table");
  return h_.row(x, y);
}


JElement AsymptoticRing::basis_product(int x, int y) const {
  JElement out;
  for (const auto& [z, hz] : row(x, y)) {
    std::int64_t g = hz.coeff(a_value(z));
    if (g != 0) add_to(out, z, Rational(g));
  }
  return out;
}

JElement AsymptoticRing::mul(const JElement& p, const JElement& q) const {
  JElement out;
  for (const auto& [x, cx] : p)
    for (const auto& [y, cy] : q)
      for (const auto& [z, cz] : basis_product(x, y)) add_to(out, z, cx * cy * cz);
  return out;
}

JElement AsymptoticRing::unit() const {
  JElement u;
  for (int d : cells_.distinguished) add_to(u, d, Rational(1));
  return u;
}

std::vector<int> AsymptoticRing::cell_ideal(int cell) const {
  std::vector<int> out;
  for (int w : cells_.two_sided_cells.at(static_cast<std::size_t>(cell)))
    if (certified(w)) out.push_back(w);
  return out;
}

JElement AsymptoticRing::cell_unit(int cell) const {
  JElement u;
  for (int d : cells_.distinguished)
    if (cells_.two_sided_cell[static_cast<std::size_t>(d)] == cell) add_to(u, d, Rational(1));
  return u;
}

std::int64_t AsymptoticRing::n_hat(int z) const {
  auto n = cells_.n_hat(ball(), z);
  if (!n) throw UncertifiedSupport("no distinguished involution found in the left cell of " + ball().label(ball().inverse(z)));
  return *n;
}

JElement AsymptoticRing::phi_basis(int x, const Rational& v) const {
  JElement out;
  for (int d : cells_.distinguished) {
    const int ad = a_value(d);
    for (const auto& [z, hz] : row(x, d))
      if (a_value(z) == ad) add_to(out, z, at(hz, v) * n_hat(z));
  }
  return out;
}

JElement AsymptoticRing::phi(const HeckeElement& h, const Rational& v) const {
  JElement out;
  for (const auto& [x, ax] : h.terms) {
    Rational c = at(ax, v);
    if (c == 0) continue;
    for (const auto& [z, cz] : phi_basis(x, v)) add_to(out, z, c * cz);
  }
  return out;
}

GradedElement AsymptoticRing::star_left(const JElement& j, const GradedElement& f) const {
  GradedElement out{f.grade, {}};
  for (const auto& [w, fw] : f.terms) {
    if (a_value(w) != f.grade) throw std::invalid_argument("grade mismatch in star action");
    for (const auto& [x, jx] : j)
      for (const auto& [z, hz] : row(x, w)) {
        if (a_value(z) != f.grade) continue;
        std::int64_t g = hz.coeff(f.grade);
        if (g) add_to(out.terms, z, jx * fw * g * n_hat(w) * n_hat(z));
      }
  }
  return out;
}

GradedElement AsymptoticRing::star_right(const GradedElement& f, const JElement& j) const {
  GradedElement out{f.grade, {}};
  for (const auto& [w, fw] : f.terms) {
    if (a_value(w) != f.grade) throw std::invalid_argument("grade mismatch in star action");
    for (const auto& [x, jx] : j)
      for (const auto& [z, hz] : row(w, x)) {
        if (a_value(z) != f.grade) continue;
        std::int64_t g = hz.coeff(f.grade);
        if (g) add_to(out.terms, z, jx * fw * g * n_hat(w) * n_hat(z));
      }
  }
  return out;
}

GradedElement AsymptoticRing::project(int grade, const Terms& r, const Rational& v, const Rational& scale) const {
  GradedElement out{grade, {}};
  for (const auto& [z, hz] : r) {
    int az = a_value(z);
    if (az < grade) throw std::logic_error("product left the ideal H^{>=i} at " + ball().label(z));
    if (az == grade) add_to(out.terms, z, scale * at(hz, v));
  }
  return out;
}

GradedElement AsymptoticRing::hecke_left(const HeckeElement& h, const GradedElement& f, const Rational& v) const {
  GradedElement out{f.grade, {}};
  for (const auto& [x, ax] : h.terms)
    for (const auto& [w, fw] : f.terms)
      for (const auto& [z, c] : project(f.grade, row(x, w), v, at(ax, v) * fw).terms) add_to(out.terms, z, c);
  return out;
}

GradedElement AsymptoticRing::hecke_right(const GradedElement& f, const HeckeElement& h, const Rational& v) const {
  GradedElement out{f.grade, {}};
  for (const auto& [y, ay] : h.terms)
    for (const auto& [w, fw] : f.terms)
      for (const auto& [z, c] : project(f.grade, row(w, y), v, at(ay, v) * fw).terms) add_to(out.terms, z, c);
  return out;
}

GradedElement AsymptoticRing::f_i(int i) const {
  GradedElement f{i, {}};
  for (int d : cells_.distinguished)
    if (a_value(d) == i) f.terms[d] = Rational(1);
  return f;
}

std::vector<int> AsymptoticRing::grade_basis(int i) const {
  std::vector<int> out;
  for (int w = 0; w < ball().size(); ++w)
    if (certified(w) && a_.value[static_cast<std::size_t>(w)] == i) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------- centre

HeckeElement bernstein_central(const KLBasis& kl, int k) {
  const Ball& B = kl.ball();
  const auto& P = B.presentation();
  if (P.tag().family != Family::InfiniteDihedral) throw std::invalid_argument("bernstein_central is implemented for the infinite dihedral group");
  if (k <= 0) throw std::invalid_argument("translation power must be positive");
  Element t{IntVector{k}, 0};
  int ti = B.index_of(t);  // throws when outside the ball
  auto rw = P.reduced_word(t);
  // T_t^-1 = T_{s_k}^-1 ... T_{s_1}^-1, built by left multiplication
  Terms inv{{B.identity(), LaurentZ(1)}};
  for (int s : rw.generators) {
    Accumulator acc(kl.size());
    acc.add_terms(kl.t_left_gen(s, inv), LaurentZ(1));
    acc.add_terms(inv, -(kl.v_s(s) - kl.v_s(s).bar()));
    inv = acc.take();
  }
  Accumulator acc(kl.size());
  acc.add_terms(inv, LaurentZ(1));
  acc.at(ti) += LaurentZ(1);
  return {Basis::T, acc.take()};
}

CheckOutcome check_central(const KLBasis& kl, const HeckeElement& z) {
  CheckOutcome out;
  const auto& P = kl.presentation();
  HeckeElement zt = kl.to_T(z);
  try {
    for (int s = 0; s < P.generator_count(); ++s) {
      ++out.checked;
      if (kl.t_left_gen(s, zt.terms) != kl.t_right_gen(s, zt.terms)) out.fail("T_" + P.generator_name(s) + " does not commute");
    }
    for (int w = 0; w < kl.ball().omega_count(); ++w) {
      ++out.checked;
      if (kl.t_left_omega(w, zt.terms) != kl.t_right_omega(w, zt.terms)) out.fail("T_w" + std::to_string(w) + " does not commute");
    }
  } catch (const BallOverflow& e) {
    out.fail(std::string("centrality not verifiable inside the ball: ") + e.what());
  }
  return out;
}

CheckOutcome center_commutation_check(const AsymptoticRing& J, const HeckeElement& z_T, const Rational& q) {
  CheckOutcome pre = check_central(J.kl(), z_T);
  if (!pre.pass) {
    CheckOutcome out;
    out.fail("input is not central: " + pre.witnesses.front());
    return out;
  }
  CheckOutcome out;
  const Rational v = sqrt_q(q);
  // z is central, hence so is z† = Σ a_w c†_w where z = Σ a_w c_w
  HeckeElement coeffs = J.kl().to_c(z_T);
  JElement pz;
  try {
    pz = J.phi(coeffs, v);
  } catch (const UncertifiedSupport& e) {
    out.fail(std::string("phi_q of the central element is not computable: ") + e.what());
    return out;
  }
  for (int x = 0; x < J.ball().size(); ++x) {
    if (!J.certified(x)) continue;
    try {
      JElement lhs = J.mul(pz, J.basis(x));
      JElement rhs = J.mul(J.basis(x), pz);
      ++out.checked;
      if (lhs != rhs) out.fail("x=" + J.ball().label(x));
    } catch (const UncertifiedSupport&) {
      ++out.skipped;
    }
  }
  return out;
}

}  // namespace hx
