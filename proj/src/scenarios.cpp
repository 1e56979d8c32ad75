#include "hx/scenarios.hpp"

#include "hx/asymptotic.hpp"
#include "hx/crossprod.hpp"
#include "hx/duality.hpp"
#include "hx/extquot.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace hx {

namespace {

using Multiset = std::map<Descriptor, int>;

const FamilyTag kInf{Family::InfiniteDihedral, 1};
const FamilyTag kSO5{Family::ExtendedAffineB2, 2};

std::string multiset_string(const Multiset& m) {
  std::string out;
  for (const auto& [d, k] : m) out += (out.empty() ? "" : " + ") + std::to_string(k) + " x " + d.to_string();
  return out.empty() ? "empty" : out;
}

Json component_json(const ExtQuotComponent& c) {
  Json j;
  j["class"] = c.class_tag;
  j["dim"] = c.dim;
  j["descriptor"] = c.descriptor.to_string();
  Json orbit = Json::array();
  for (const auto& p : c.orbit) orbit.push_back(to_string(p));
  j["points"] = orbit;
  return j;
}

Json dims_json(const std::vector<int>& v) { return Json(v); }

std::string dims_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

Json decomposition_json(const std::string& at, const ModuleDecomposition& d) {
  Json j;
  j["point"] = at;
  j["algebra_dim"] = d.algebra_dim;
  j["simple_dims"] = dims_json(d.simple_dims());
  j["zero_dim"] = d.zero_dim();
  j["complete"] = d.complete;
  Json sub = Json::array();
  for (const auto& s : d.summands) sub.push_back(s.basis.to_string());
  j["summand_bases"] = sub;
  return j;
}

// equal column spans
bool same_span(const QMatrix& a, const std::vector<std::vector<Rational>>& cols) {
  QMatrix b = QMatrix::from_columns(cols, a.rows());
  QMatrix both(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) both(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) both(i, a.cols() + j) = b(i, j);
  }
  return rank(a) == rank(b) && rank(both) == rank(a);
}

// rationals z with z^2 != 1, small height
std::vector<Rational> generic_points(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    int a = num(rng), b = den(rng);
    if (a == 0) continue;
    Rational z(a, b);
    if (z * z == 1 || std::find(out.begin(), out.end(), z) != out.end()) continue;
    out.push_back(z);
  }
  return out;
}

struct Ctx {
  const ScenarioParams& p;
  const Cache& cache;
  Json params;

  int radius(int def) {
    int r = p.radius.value_or(def);
    if (r < 0 || r > 40) throw UsageError("--radius must lie in 0..40");
    params["radius"] = r;
    return r;
  }
  int margin(int def) {
    int m = p.margin.value_or(def);
    if (m < 0) throw UsageError("--margin must be non-negative");
    params["margin"] = m;
    return m;
  }
  int samples(int def) {
    int s = p.samples.value_or(def);
    if (s < 1 || s > 100000) throw UsageError("--samples must lie in 1..100000");
    params["samples"] = s;
    return s;
  }
  int n(int def, int lo, int hi) {
    int v = p.n.value_or(def);
    if (v < lo || v > hi) throw UsageError("--n must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
    params["n"] = v;
    return v;
  }
  std::vector<Rational> qs(std::vector<Rational> def) {
    auto q = p.q.empty() ? std::move(def) : p.q;
    Json j = Json::array();
    for (const auto& x : q) {
      try {
        sqrt_q(x);
      } catch (const std::invalid_argument&) {
        throw UsageError("--q must be the square of a nonzero rational, got " + to_string(x));
      }
      j.push_back(to_string(x));
    }
    params["q"] = j;
    return q;
  }
};

std::shared_ptr<const Ball> make_ball(FamilyTag tag, int radius) {
  return std::make_shared<Ball>(Presentation::make(tag), radius);
}

Json cell_json(const Ball& B, const CellPartition& cells, std::size_t c) {
  Json j;
  const auto& members = cells.two_sided_cells[c];
  j["cell"] = c;
  j["size_in_ball"] = members.size();
  j["a"] = cells.cell_a[c];
  j["a_consistent"] = static_cast<bool>(cells.cell_a_consistent[c]);
  Json sample = Json::array();
  for (std::size_t i = 0; i < members.size() && i < 6; ++i) sample.push_back(B.label(members[i]));
  j["shortest_members"] = sample;
  return j;
}

// ---------------------------------------------------------------- SL(2)

void sl2_extquot(Ctx&, Report& r) {
  auto act = TorusAction::inversion();
  auto comps = extended_quotient(act);
  for (const auto& c : comps) r.data("component", component_json(c));
  Multiset want{{Descriptor::line_mod_inversion(), 1}, {Descriptor::point(), 2}};
  auto got = descriptor_multiset(comps);
  r.check("census", "1 x LineModInversion + 2 x Point", got == want, Json::array({multiset_string(got)}));

  int g = act.identity() == 0 ? 1 : 0;
  auto orbits = torsion_orbit_census(act, g);
  Json pts = Json::array();
  bool singletons = true;
  for (const auto& o : orbits) {
    Json oj = Json::array();
    for (const auto& x : o) oj.push_back(to_string(x));
    pts.push_back(oj);
    singletons = singletons && o.size() == 1;
  }
  r.check("inversion-fixed-points", "fixed points 1 and -1, each its own orbit", orbits.size() == 2 && singletons,
          Json::array({pts.dump()}));

  auto m = match_conjecture(GroupKind::SL2);
  for (const auto& rec : m.records)
    r.data("match-record", {{"side", rec.side}, {"tag", rec.tag}, {"dim", rec.dim}, {"descriptor", rec.descriptor}});
  Json w = Json::array({"cells: " + multiset_string(m.cell_side), "extquot: " + multiset_string(m.extquot_side)});
  for (const auto& n : m.notes) w.push_back(n);
  r.check("match", "cell side equals extended quotient", m.verdict, w);
}

void sl2_crossprod(Ctx& ctx, Report& r) {
  const int samples = ctx.samples(100);
  std::mt19937_64 rng(ctx.p.seed);

  {
    int bad = 0;
    Json w = Json::array();
    for (int i = 0; i < samples; ++i) {
      auto a = random_crossed(rng, 6), b = random_crossed(rng, 6), c = random_crossed(rng, 6);
      if (!((a * b) * c == a * (b * c))) {
        ++bad;
        if (w.size() < 3) w.push_back(a.to_string() + " | " + b.to_string() + " | " + c.to_string());
      }
    }
    r.check("associativity", std::to_string(samples) + " random triples, degree <= 6", bad == 0, w);
  }
  {
    int bad = 0;
    Json w = Json::array();
    for (int i = 0; i < samples; ++i) {
      auto a = random_crossed(rng, 8), b = random_crossed(rng, 8);
      auto ma = matrix_realization(a), mb = matrix_realization(b);
      bool ok = ma.in_block_pattern() && matrix_realization(a * b) == ma * mb && matrix_realization(a + b) == ma + mb;
      if (!ok && ++bad <= 3) w.push_back(a.to_string() + " | " + b.to_string());
    }
    r.check("realization-homomorphism", std::to_string(samples) + " random pairs, degree <= 8", bad == 0, w);
  }

  std::vector<CrossedElement> basis;
  for (int k = -8; k <= 8; ++k) {
    basis.push_back(CrossedElement::t(k));
    basis.push_back(CrossedElement::alpha() * CrossedElement::t(k));
  }
  {
    std::vector<std::vector<Rational>> c2, c4;
    for (const auto& x : basis) {
      std::vector<Rational> v2, v4;
      auto m = matrix_realization(x);
      for (const auto& row : m.a)
        for (const auto& e : row)
          for (int k = -8; k <= 8; ++k) v2.push_back(e.coeff(k));
      auto p = psi_embed(0, x);
      for (int i = 2; i < 4; ++i)
        for (int j = 2; j < 4; ++j)
          for (int k = -8; k <= 8; ++k) v4.push_back(p.entry(i, j).coeff(k));
      c2.push_back(std::move(v2));
      c4.push_back(std::move(v4));
    }
    int r2 = rank(QMatrix::from_columns(c2, static_cast<int>(c2.front().size())));
    int r4 = rank(QMatrix::from_columns(c4, static_cast<int>(c4.front().size())));
    const int want = static_cast<int>(basis.size());
    r.check("realization-injective", "images of t^k, alpha t^k (|k| <= 8) independent", r2 == want,
            Json::array({"rank " + std::to_string(r2) + " of " + std::to_string(want)}));
    r.check("psi-injective", "images of t^k, alpha t^k (|k| <= 8) independent", r4 == want,
            Json::array({"rank " + std::to_string(r4) + " of " + std::to_string(want)}));
  }
  {
    int bad = 0;
    Json w = Json::array();
    const CrossedElement kill{LaurentQ::var(2) - LaurentQ::monomial(2, 0) + LaurentQ::var(-2), {}};
    int ideal_bad = 0;
    for (int i = 0; i < samples; ++i) {
      auto x = random_crossed(rng, 6), y = random_crossed(rng, 6);
      auto mx = matrix_realization(x), my = matrix_realization(y);
      auto sx = spectrum_map(mx);
      bool ok = spectrum_map(mx * my) == sx * spectrum_map(my);
      for (const auto& row : sx.m.a)
        for (const auto& e : row) ok = ok && e.is_balanced();
      if (!ok && ++bad <= 3) w.push_back(x.to_string() + " | " + y.to_string());
      auto mi = matrix_realization(kill * x);
      auto si = spectrum_map(mi);
      if (!in_ideal_I(mi) || si.at_plus_one != 0 || si.at_minus_one != 0) ++ideal_bad;
    }
    auto id = spectrum_map(Matrix2::identity());
    auto al = spectrum_map(matrix_realization(CrossedElement::alpha()));
    bool pts = id.at_plus_one == 1 && id.at_minus_one == 1 && al.at_plus_one == -1 && al.at_minus_one == -1;
    r.check("spectrum-homomorphism", std::to_string(samples) + " random pairs; values at 1 and -1 of 1 and alpha",
            bad == 0 && pts, w);
    r.check("ideal-filtration", "ideal I lands in the M2(L) summand", ideal_bad == 0,
            Json::array({std::to_string(samples) + " elements of I, " + std::to_string(ideal_bad) + " with nonzero scalar part"}));
  }
  {
    int bad = 0;
    Json w = Json::array();
    for (int i = 0; i < samples; ++i) {
      auto x = random_crossed(rng, 8), y = random_crossed(rng, 8);
      Rational l1(static_cast<int>(rng() % 7) - 3), l2(static_cast<int>(rng() % 7) - 3);
      auto px = psi_embed(l1, x), py = psi_embed(l2, y);
      auto prod = px * py;
      bool ok = px.constraints_hold() && prod.constraints_hold() && prod == psi_embed(l1 * l2, x * y);
      if (!ok && ++bad <= 3) w.push_back(x.to_string() + " | " + y.to_string());
    }
    r.check("psi-homomorphism", std::to_string(samples) + " random pairs, degree <= 8, constraints kept", bad == 0, w);
  }

  auto generic = generic_points(rng, 5);
  {
    bool ok = true;
    int extra_points = 0;
    for (const auto& z : generic) {
      auto d = evaluate_crossed_module(z);
      r.data("crossed-module", decomposition_json(to_string(z), d), d.complete);
      ok = ok && d.complete && d.simple_dims() == std::vector<int>{2};
    }
    for (Rational z : {Rational(1), Rational(-1)}) {
      auto d = evaluate_crossed_module(z);
      r.data("crossed-module", decomposition_json(to_string(z), d), d.complete);
      ok = ok && d.complete && d.simple_dims() == std::vector<int>{1, 1};
      extra_points += static_cast<int>(d.simple_dims().size()) - 1;
    }
    r.check("prim-census", "simple 2-dim at z^2 != 1, two 1-dim at z = +-1: L + 2 points", ok && extra_points == 2,
            Json::array({"1 x L + " + std::to_string(extra_points) + " x Point"}));
  }
  {
    bool ok = true;
    Json w = Json::array();
    for (const auto& z : generic) {
      auto d = evaluate_module(ModulePoint{false, z});
      r.data("constrained-module", decomposition_json(to_string(z), d), d.complete);
      if (!(d.complete && d.algebra_dim == 16 && d.simple_dims() == std::vector<int>{4})) {
        ok = false;
        w.push_back(to_string(z) + ": " + dims_string(d.simple_dims()));
      }
    }
    r.check("modules-generic", "{4} at 5 sampled generic points", ok, w);
  }
  {
    bool ok = true;
    Json w = Json::array();
    for (Rational z : {Rational(1), Rational(-1)}) {
      auto d = evaluate_module(ModulePoint{false, z});
      r.data("constrained-module", decomposition_json(to_string(z), d), d.complete);
      bool here = d.complete && d.simple_dims() == std::vector<int>{3, 1};
      for (const auto& s : d.summands) {
        if (s.dim == 3) here = here && same_span(s.basis, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
        else if (s.dim == 1) here = here && same_span(s.basis, {{0, 0, 1, -1}});
      }
      if (!here) {
        ok = false;
        w.push_back(to_string(z) + ": " + dims_string(d.simple_dims()));
      }
    }
    r.check("modules-special", "{3,1} at z = +-1, 3-dim part span(e1, e2, e3+e4)", ok, w);
  }
  {
    bool ok = true;
    for (const auto& z : generic) {
      auto d = evaluate_psi_module(ModulePoint{false, z});
      ok = ok && d.simple_dims() == std::vector<int>{2} && d.zero_dim() == 2;
    }
    for (Rational z : {Rational(1), Rational(-1)}) {
      auto d = evaluate_psi_module(ModulePoint{false, z});
      ok = ok && d.simple_dims() == std::vector<int>{1, 1} && d.zero_dim() == 2;
    }
    r.check("psi-modules", "bottom block simple iff z^2 != 1, beside a 2-dim zero module", ok);
  }
}

// ---------------------------------------------------------------- infinite dihedral

void inf_cells(Ctx& ctx, Report& r) {
  const int R = ctx.radius(10), M = ctx.margin(3);
  auto ball = make_ball(kInf, R);
  const Ball& B = *ball;
  auto kl = ctx.cache.kl(ball);
  {
    Json w = Json::array();
    int bad = 0;
    for (int x = 0; x < B.size(); ++x) {
      Terms expect;
      for (int y = 0; y < B.size(); ++y)
        if (y == x || B.length(y) < B.length(x)) expect.emplace_back(y, LaurentZ::var(B.length(y) - B.length(x)));
      if (kl->c(x) != expect && ++bad <= 3) w.push_back(B.label(x));
    }
    r.check("kl-closed-form", "c_w = sum over y <= w of v^(l(y)-l(w)) T_y on all " + std::to_string(B.size()) + " elements",
            bad == 0, w);
  }
  AFunction a = compute_a_function(*kl, M);
  CellPartition cells = compute_cells(*kl, a);
  {
    Json w = Json::array();
    int certified = 0;
    bool ok = a.is_certified(B.identity());
    for (int z = 0; z < B.size(); ++z) {
      const int v = a.value[static_cast<std::size_t>(z)];
      r.data("a", {{"element", B.label(z)}, {"a", v}}, a.is_certified(z));
      if (!a.is_certified(z)) continue;
      ++certified;
      int want = z == B.identity() ? 0 : 1;
      if (v != want) {
        ok = false;
        if (w.size() < 3) w.push_back(B.label(z) + ": a = " + std::to_string(v));
      }
    }
    w.push_back(std::to_string(certified) + " of " + std::to_string(B.size()) + " elements certified");
    r.check("a-values", "a(e) = 0, a = 1 elsewhere, on the certified region", ok && certified > 1, w);
  }
  {
    for (std::size_t c = 0; c < cells.two_sided_cells.size(); ++c)
      r.data("two-sided-cell", cell_json(B, cells, c), cells.cell_certified[c] != 0);
    auto cert = cells.certified_two_sided();
    r.check("two-sided-cells", "exactly two two-sided cells", cells.two_sided_cells.size() == 2 && cert.size() == 2,
            Json::array({std::to_string(cells.two_sided_cells.size()) + " cells, " + std::to_string(cert.size()) + " certified"}));
  }
  {
    std::set<std::string> D;
    Json w = Json::array();
    bool signs = true;
    for (std::size_t i = 0; i < cells.distinguished.size(); ++i) {
      D.insert(B.label(cells.distinguished[i]));
      w.push_back(B.label(cells.distinguished[i]) + ": n = " + std::to_string(cells.n_sign[i]));
      signs = signs && cells.n_sign[i] == 1;
    }
    r.check("distinguished", "D = {e, s1, s2}, all n_d = 1", signs && D == std::set<std::string>{"e", "s1", "s2"}, w);
  }
}

void inf_properties(Ctx& ctx, Report& r) {
  const int R = ctx.radius(10), M = ctx.margin(3);
  auto ball = make_ball(kInf, R);
  auto kl = ctx.cache.kl(ball);
  AFunction a = compute_a_function(*kl, M);
  CellPartition cells = compute_cells(*kl, a);
  HTable h = ctx.cache.htable(*kl, R);
  for (const auto& p : check_properties(*kl, a, h, cells)) {
    Json w = Json::array();
    for (const auto& x : p.witnesses) w.push_back(x);
    w.push_back(std::to_string(p.checked) + " instances checked");
    r.check(p.name, "holds on every certified instance", p.pass && p.checked > 0, w);
  }
}

void inf_J(Ctx& ctx, Report& r) {
  const int R = ctx.radius(24), M = ctx.margin(3);
  const int samples = ctx.samples(50);
  const auto qs = ctx.qs({Rational(1), Rational(4)});
  auto ball = make_ball(kInf, R);
  const Ball& B = *ball;
  auto kl = ctx.cache.kl(ball);
  AFunction a = compute_a_function(*kl, M);
  CellPartition cells = compute_cells(*kl, a);
  HTable h = ctx.cache.htable(*kl, R);
  AsymptoticRing J(h, a, cells);
  std::vector<int> six;
  for (int i = 0; i < B.size(); ++i)
    if (B.length(i) <= 6) six.push_back(i);
  auto counts = [](long checked, long skipped) {
    return std::to_string(checked) + " checked, " + std::to_string(skipped) + " skipped (support leaves the certified region)";
  };

  {
    CheckOutcome o;
    JElement u = J.unit();
    if (!(J.mul(u, u) == u)) o.fail("unit is not idempotent");
    for (int x = 0; x < B.size(); ++x) {
      if (!a.is_certified(x)) continue;
      try {
        if (!(J.mul(u, J.basis(x)) == J.basis(x)) || !(J.mul(J.basis(x), u) == J.basis(x))) o.fail(B.label(x));
        ++o.checked;
      } catch (const UncertifiedSupport&) {
        ++o.skipped;
      }
    }
    Json w(o.witnesses);
    w.push_back(counts(o.checked, o.skipped));
    r.check("unit", "sum of t_d over D is a two-sided unit", o.pass && o.checked > 0, w);
  }
  {
    CheckOutcome o;
    for (int x : six)
      for (int y : six)
        for (int z : six) {
          try {
            if (!(J.mul(J.basis_product(x, y), J.basis(z)) == J.mul(J.basis(x), J.basis_product(y, z))))
              o.fail(B.label(x) + " " + B.label(y) + " " + B.label(z));
            ++o.checked;
          } catch (const UncertifiedSupport&) {
            ++o.skipped;
          }
        }
    Json w(o.witnesses);
    w.push_back(counts(o.checked, o.skipped));
    r.check("associativity", "(t_x t_y) t_z = t_x (t_y t_z) for l <= 6", o.pass && o.checked > 0 && o.skipped == 0, w);
  }
  {
    CheckOutcome o;
    for (int x : six)
      for (int y : six) {
        try {
          auto prod = J.basis_product(x, y);
          int cx = cells.two_sided_cell[static_cast<std::size_t>(x)], cy = cells.two_sided_cell[static_cast<std::size_t>(y)];
          bool ok = cx == cy || prod.empty();
          for (const auto& [z, c] : prod) ok = ok && cells.two_sided_cell[static_cast<std::size_t>(z)] == cx;
          if (!ok) o.fail(B.label(x) + " " + B.label(y));
          ++o.checked;
        } catch (const UncertifiedSupport&) {
          ++o.skipped;
        }
      }
    Json w(o.witnesses);
    w.push_back(counts(o.checked, o.skipped));
    r.check("cell-ideals", "products stay in one two-sided cell, cross-cell products vanish", o.pass && o.checked > 0, w);
  }
  {
    CheckOutcome o;
    for (int x = 0; x < B.size(); ++x) {
      if (!a.is_certified(x)) continue;
      try {
        const int i = a.value[static_cast<std::size_t>(x)];
        GradedElement expect{i, {{x, Rational(J.n_hat(x))}}};
        if (!(J.star_left(J.basis(x), J.f_i(i)) == expect) || !(J.star_right(J.f_i(i), J.basis(x)) == expect))
          o.fail(B.label(x));
        ++o.checked;
      } catch (const UncertifiedSupport&) {
        ++o.skipped;
      }
    }
    Json w(o.witnesses);
    w.push_back(counts(o.checked, o.skipped));
    r.check("bimodule-lemma", "t_x * f_i = n_x [c_x] = f_i * t_x for certified x", o.pass && o.checked > 0, w);
  }
  for (const auto& q : qs) {
    const Rational v = sqrt_q(q);
    CheckOutcome o;
    HeckeElement one{Basis::C, {{B.identity(), LaurentZ(1)}}};
    if (!(J.phi(one, v) == J.unit())) o.fail("phi(1) is not the unit");
    std::mt19937_64 rng(ctx.p.seed);
    std::uniform_int_distribution<std::size_t> pick(0, six.size() - 1);
    for (int k = 0; k < samples; ++k) {
      int x = six[pick(rng)], y = six[pick(rng)];
      try {
        JElement lhs = J.phi(HeckeElement{Basis::C, h.row(x, y)}, v);
        JElement rhs = J.mul(J.phi_basis(x, v), J.phi_basis(y, v));
        if (!(lhs == rhs)) o.fail(B.label(x) + " " + B.label(y));
        ++o.checked;
      } catch (const UncertifiedSupport&) {
        ++o.skipped;
      }
    }
    Json w(o.witnesses);
    w.push_back(counts(o.checked, o.skipped));
    r.check("phi-homomorphism q=" + to_string(q), std::to_string(samples) + " random pairs, unital", o.pass && o.checked > 0, w);
  }
  for (const auto& q : qs) {
    bool ok = true;
    Json w = Json::array();
    for (int k = 1; k <= 2; ++k) {
      HeckeElement z = bernstein_central(*kl, k);
      auto central = check_central(*kl, z);
      auto o = center_commutation_check(J, z, q);
      ok = ok && central.pass && o.pass && o.checked > 0;
      w.push_back("k=" + std::to_string(k) + ": " + (central.pass ? "central" : "not central") + ", " +
                  counts(o.checked, o.skipped));
      for (const auto& x : o.witnesses) w.push_back(x);
    }
    r.check("center q=" + to_string(q), "phi of T_t^k + T_t^-k (k = 1, 2) commutes with every t_x", ok, w);
  }
}

// ---------------------------------------------------------------- SO(5)

void so5_cells(Ctx& ctx, Report& r) {
  const int R = ctx.radius(12), M = ctx.margin(3);
  auto ball = make_ball(kSO5, R);
  const Ball& B = *ball;
  auto kl = ctx.cache.kl(ball);
  AFunction a = compute_a_function(*kl, M);
  CellPartition cells = compute_cells(*kl, a);
  auto cert = cells.certified_two_sided();
  int certified = 0;
  for (int z = 0; z < B.size(); ++z) certified += a.is_certified(z) ? 1 : 0;
  r.data("certified-elements", {{"certified", certified}, {"ball", B.size()}});
  for (std::size_t c = 0; c < cells.two_sided_cells.size(); ++c)
    r.data("two-sided-cell", cell_json(B, cells, c), cells.cell_certified[c] != 0);

  std::multiset<int> avals;
  bool consistent = true;
  for (int c : cert) {
    avals.insert(cells.cell_a[static_cast<std::size_t>(c)]);
    consistent = consistent && cells.cell_a_consistent[static_cast<std::size_t>(c)];
  }
  const std::string unsure = "certification incomplete at radius " + std::to_string(R) + "; increase --radius";
  {
    Json w = Json::array({std::to_string(cert.size()) + " certified cells"});
    const auto rest = cells.two_sided_cells.size() - cert.size();
    if (rest > 0) w.push_back(std::to_string(rest) + " further classes lie wholly in the uncertified region");
    if (cert.size() < 4) w.push_back(unsure);
    r.check("cell-count", "exactly four two-sided cells", cert.size() == 4, w);
  }
  {
    Json got = Json::array();
    for (int v : avals) got.push_back(v);
    Json w = Json::array({"a-values " + got.dump()});
    if (!consistent) w.push_back("a not constant on some certified cell");
    if (cert.size() < 4) w.push_back(unsure);
    r.check("a-values", "certified a-values {0, 1, 2, 4}", consistent && avals == std::multiset<int>{0, 1, 2, 4}, w);
  }
  {
    std::set<int> omega;
    for (int i = 0; i < B.size(); ++i)
      if (B.length(i) == 0) omega.insert(i);
    bool ok = false;
    Json w = Json::array();
    for (int c : cert) {
      if (cells.cell_a[static_cast<std::size_t>(c)] != 0) continue;
      const auto& m = cells.two_sided_cells[static_cast<std::size_t>(c)];
      ok = std::set<int>(m.begin(), m.end()) == omega;
      for (int x : m) w.push_back(B.label(x));
    }
    r.check("lowest-a-is-omega", "the a = 0 cell is the length-zero subgroup", ok, w);
  }
}

void so5_extquot(Ctx&, Report& r) {
  auto act = TorusAction::dual_torus(*Presentation::make(kSO5));
  auto classes = conjugacy_classes(act);
  for (const auto& c : classes)
    r.data("class", {{"representative", act.name(c.representative)}, {"size", c.members.size()}, {"centralizer_order", c.centralizer.size()}});
  r.check("class-count", "5 conjugacy classes in W_f", classes.size() == 5,
          Json::array({std::to_string(classes.size()) + " classes"}));
  auto comps = extended_quotient(act);
  for (const auto& c : comps) r.data("component", component_json(c));
  Multiset want{{Descriptor::point(), 5}, {Descriptor::line_mod_inversion(), 3}, {Descriptor::torus_mod_group(2, act.group_label()), 1}};
  auto got = descriptor_multiset(comps);
  r.check("census", "5 x Point + 3 x LineModInversion + 1 two-dimensional component", got == want,
          Json::array({multiset_string(got)}));
  int g6 = -1;
  for (int g = 0; g < act.order(); ++g)
    if (act.name(g) == "g6") g6 = g;
  std::vector<std::size_t> sizes;
  Json w = Json::array();
  for (const auto& o : torsion_orbit_census(act, g6)) {
    sizes.push_back(o.size());
    Json oj = Json::array();
    for (const auto& x : o) oj.push_back(to_string(x));
    w.push_back(oj.dump());
  }
  auto sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  r.check("g6-orbits", "3 orbits of sizes 1, 2, 1", sorted == std::vector<std::size_t>{1, 1, 2}, w);
}

void so5_jc1(Ctx& ctx, Report& r) {
  std::mt19937_64 rng(ctx.p.seed);
  auto d = DualGroupDatum::make(GroupKind::SO5);
  auto f = centralizer_reductive(d, {"c1", {}});
  auto rr = rep_ring_descriptor(f);
  r.data("centralizer", f.to_string());
  Multiset got;
  for (const auto& x : rr.components) ++got[x];
  Multiset want{{Descriptor::point(), 3}, {Descriptor::line_mod_inversion(), 1}};
  r.check("components", "(1 + 2) x Point + 1 x LineModInversion", !rr.disconnected && got == want,
          Json::array({multiset_string(got)}));

  bool generic_ok = true;
  for (const auto& z : generic_points(rng, 5)) {
    auto m = evaluate_module(ModulePoint{false, z});
    r.data("module", decomposition_json(to_string(z), m), m.complete);
    generic_ok = generic_ok && m.complete && m.simple_dims() == std::vector<int>{4};
  }
  r.check("generic-modules", "simple 4-dim module at 5 sampled points", generic_ok);
  bool special_ok = true;
  for (Rational z : {Rational(1), Rational(-1)}) {
    auto m = evaluate_module(ModulePoint{false, z});
    r.data("module", decomposition_json(to_string(z), m), m.complete);
    bool here = m.complete && m.simple_dims() == std::vector<int>{3, 1};
    for (const auto& s : m.summands)
      if (s.dim == 3) here = here && same_span(s.basis, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
    special_ok = special_ok && here;
  }
  r.check("special-modules", "dimensions 3 and 1 at z = +-1", special_ok);
  auto al = evaluate_module(ModulePoint::parse("alpha"));
  r.data("module", decomposition_json("alpha", al), al.complete);
  r.check("alpha-module", "2-dim simple module on the alpha class",
          al.complete && al.simple_dims() == std::vector<int>{2} && al.zero_dim() == 2);
}

void add_match(Report& r, const MatchReport& m, const std::string& expect) {
  for (const auto& rec : m.records)
    r.data("match-record", {{"side", rec.side}, {"tag", rec.tag}, {"dim", rec.dim}, {"descriptor", rec.descriptor}},
           rec.dim >= 0);
  Json w = Json::array({"cells: " + multiset_string(m.cell_side), "extquot: " + multiset_string(m.extquot_side)});
  for (const auto& n : m.notes) w.push_back(n);
  r.check("match", expect, m.verdict, w);
}

void so5_match(Ctx&, Report& r) {
  add_match(r, match_conjecture(GroupKind::SO5), "cell side equals extended quotient: 5 x Point + 3 x L + 1 surface");
}

// ---------------------------------------------------------------- type A

void pgl_iwahori(Ctx& ctx, Report& r) {
  const int n = ctx.n(3, 2, 5);
  auto d = DualGroupDatum::make(GroupKind::PGL, n);
  Partition ones(static_cast<std::size_t>(n), 1);
  auto f = centralizer_reductive(d, {to_string(ones), ones});
  auto rr = rep_ring_descriptor(f);
  r.data("centralizer", {{"class", to_string(ones)}, {"reductive", f.to_string()}});
  int cycle = -1;
  for (const auto& c : conjugacy_classes(d.action))
    if (c.tag == "(" + std::to_string(n) + ")") cycle = c.representative;
  auto orbits = torsion_orbit_census(d.action, cycle);
  Json pts = Json::array();
  bool singletons = true;
  for (const auto& o : orbits) {
    singletons = singletons && o.size() == 1;
    for (const auto& x : o) pts.push_back(to_string(x));
  }
  bool ok = singletons && static_cast<int>(orbits.size()) == n && !rr.disconnected &&
            rr.components == std::vector<Descriptor>(static_cast<std::size_t>(n), Descriptor::point());
  r.check("regular-class", std::to_string(n) + " singleton orbits, matching n points of R(Z/n)", ok, Json::array({pts.dump()}));
  add_match(r, match_conjecture(GroupKind::PGL, n), "cell side equals extended quotient");
}

void gl_match(Ctx& ctx, Report& r) {
  const int n = ctx.n(4, 2, 6);
  auto d = DualGroupDatum::make(GroupKind::GL, n);
  auto comps = extended_quotient(d.action);
  bool ok = true;
  Json w = Json::array();
  for (const auto& c : d.classes) {
    std::string cyc = to_string(dual_partition(c.partition));
    auto want = rep_ring_descriptor(centralizer_reductive(d, c)).components;
    std::vector<Descriptor> hits;
    for (const auto& x : comps)
      if (x.class_tag == cyc) hits.push_back(x.descriptor);
    r.data("partition", {{"partition", c.tag}, {"cycle_type", cyc}, {"descriptor", want.empty() ? "" : want.front().to_string()}});
    if (want.size() != 1 || hits != want) {
      ok = false;
      w.push_back(c.tag);
    }
  }
  r.check("bijection", "each partition's SymProduct equals the component of its cycle type", ok, w);
  r.check("component-count", "p(" + std::to_string(n) + ") components", static_cast<std::int64_t>(comps.size()) == partition_count(n),
          Json::array({std::to_string(comps.size()) + " components, p(n) = " + std::to_string(partition_count(n))}));
  add_match(r, match_conjecture(GroupKind::GL, n), "cell side equals extended quotient");
}

void gl_bernstein(Ctx& ctx, Report& r) {
  auto e = ctx.p.exponents.empty() ? std::vector<int>{2, 1} : ctx.p.exponents;
  auto t = ctx.p.torsion.empty() ? std::vector<int>(e.size(), 1) : ctx.p.torsion;
  if (e.size() != t.size()) throw UsageError("--exponents and --torsion need the same length");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 1 || e[i] > 6 || t[i] < 1) throw UsageError("exponents must lie in 1..6 and torsion numbers be positive");
  ctx.params["exponents"] = e;
  ctx.params["torsion"] = t;
  auto b = bernstein_point_gl(e, t);
  r.data("hecke-factors", b.hecke_factors);
  for (const auto& c : b.components) r.data("component", component_json(c));
  std::int64_t expect = 1;
  int total = 0;
  std::vector<int> parts;
  for (int x : e) {
    expect *= partition_count(x);
    total += x;
  }
  r.check("factor-count", std::to_string(e.size()) + " tensor factors", b.hecke_factors.size() == e.size());
  r.check("component-count", "product of p(e_i) = " + std::to_string(expect),
          static_cast<std::int64_t>(b.components.size()) == expect,
          Json::array({std::to_string(b.components.size()) + " components"}));
  int top = 0;
  bool top_ok = false;
  for (const auto& c : b.components)
    if (c.dim == total) {
      ++top;
      top_ok = c.descriptor == Descriptor::sym_product(e);
    }
  r.check("top-component", "one component of dimension " + std::to_string(total) + ", the product of Sym^e_i",
          top == 1 && top_ok);
  const bool generic = std::all_of(e.begin(), e.end(), [](int x) { return x == 1; });
  r.check("generic", generic ? "trivial W: a single component" : "nontrivial W: several components",
          generic == (b.components.size() == 1));
}

void lowest_cell(Ctx& ctx, Report& r) {
  std::string g = ctx.p.group.value_or("all");
  ctx.params["group"] = g;
  std::vector<DualGroupDatum> data;
  try {
    if (g == "all") {
      data.push_back(DualGroupDatum::make(GroupKind::SL2));
      data.push_back(DualGroupDatum::make(GroupKind::SO5));
      for (int n = 2; n <= 5; ++n) data.push_back(DualGroupDatum::make(GroupKind::PGL, n));
      for (int n = 2; n <= 5; ++n) data.push_back(DualGroupDatum::make(GroupKind::GL, n));
    } else {
      data.push_back(DualGroupDatum::from_tag(FamilyTag::parse(g)));
    }
  } catch (const std::invalid_argument& ex) {
    throw UsageError(std::string("--group: ") + ex.what());
  }
  for (const auto& d : data) {
    const bool typeA = d.kind == GroupKind::GL || d.kind == GroupKind::PGL;
    UnipotentClass lowest = typeA ? UnipotentClass{"(" + std::to_string(d.n) + ")", {d.n}} : UnipotentClass{"c0", {}};
    auto f = centralizer_reductive(d, lowest);
    auto rr = rep_ring_descriptor(f);
    auto comps = extended_quotient(d.action);
    std::vector<Descriptor> id;
    for (const auto& c : comps)
      if (c.representative == d.action.identity()) id.push_back(c.descriptor);
    std::string lhs, rhs;
    for (const auto& x : rr.components) lhs += (lhs.empty() ? "" : " + ") + x.to_string();
    for (const auto& x : id) rhs += (rhs.empty() ? "" : " + ") + x.to_string();
    r.data("lowest-cell", {{"group", d.group}, {"dual_group", d.dual_group}, {"centralizer", f.to_string()},
                           {"rep_ring", lhs}, {"identity_component", rhs}});
    r.check(d.group, "representation ring of the dual group equals the identity-class component",
            !rr.disconnected && rr.components == id, Json::array({lhs + " vs " + rhs}));
  }
}

struct Entry {
  ScenarioInfo info;
  std::function<void(Ctx&, Report&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {{"sl2-extquot", "extended quotient of C^x by inversion and the SL(2) match", {}}, sl2_extquot},
      {{"sl2-crossprod", "crossed product maps, spectrum map, psi and evaluation modules", {"samples"}}, sl2_crossprod},
      {{"infdihedral-cells", "KL basis, a-function and cells of the infinite dihedral group", {"radius", "margin"}}, inf_cells},
      {{"infdihedral-P-properties", "properties P1-P8 on the infinite dihedral group", {"radius", "margin"}}, inf_properties},
      {{"infdihedral-J", "asymptotic ring, phi_q and the centre", {"radius", "margin", "q", "samples"}}, inf_J},
      {{"so5-cells", "two-sided cells and a-values for SO(5)", {"radius", "margin"}}, so5_cells},
      {{"so5-extquot", "extended quotient of the dual torus of SO(5) by W(B2)", {}}, so5_extquot},
      {{"so5-jc1", "the J_c1 summand through the constrained matrix ring", {}}, so5_jc1},
      {{"so5-match", "cells against the extended quotient for SO(5)", {}}, so5_match},
      {{"pgl-iwahori", "PGL(n): regular class orbits and the full match", {"n"}}, pgl_iwahori},
      {{"gl-match", "GL(n): partitions against extended quotient components", {"n"}}, gl_match},
      {{"gl-bernstein-point", "Hecke factors and extended quotient at a GL Bernstein point", {"exponents", "torsion"}}, gl_bernstein},
      {{"lowest-cell", "lowest two-sided cell against the identity-class component", {"group"}}, lowest_cell},
  };
  return e;
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> c = [] {
    std::vector<ScenarioInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return c;
}

Report run_scenario(const std::string& name, const ScenarioParams& p, const Cache& cache) {
  auto it = std::find_if(entries().begin(), entries().end(), [&](const Entry& e) { return e.info.name == name; });
  if (it == entries().end()) throw UsageError("unknown scenario '" + name + "'");
  const auto& flags = it->info.flags;
  auto allowed = [&](const char* f) { return std::find(flags.begin(), flags.end(), f) != flags.end(); };
  std::vector<std::pair<const char*, bool>> given = {
      {"radius", p.radius.has_value()}, {"margin", p.margin.has_value()},   {"samples", p.samples.has_value()},
      {"n", p.n.has_value()},           {"q", !p.q.empty()},                {"group", p.group.has_value()},
      {"exponents", !p.exponents.empty()}, {"torsion", !p.torsion.empty()}};
  for (const auto& [f, set] : given)
    if (set && !allowed(f)) throw UsageError(std::string("--") + f + " does not apply to " + name);
  Ctx ctx{p, cache, Json::object()};
  Report r(name, Json::object(), p.seed);
  it->run(ctx, r);
  r.set_params(ctx.params);
  return r;
}

}  // namespace hx
