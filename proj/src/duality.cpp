#include "hx/duality.hpp"

#include "hx/crossprod.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hx {

bool is_partition(const Partition& p) {
  if (p.empty()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

std::vector<Partition> partitions(int n) {
  if (n < 1) throw std::invalid_argument("partitions of a non-positive integer");
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int max) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, max); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition dual_partition(const Partition& p) {
  if (!is_partition(p)) throw std::invalid_argument("not a partition: " + to_string(p));
  Partition d(static_cast<std::size_t>(p.front()), 0);
  for (int part : p)
    for (int i = 0; i < part; ++i) ++d[static_cast<std::size_t>(i)];
  return d;
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + ")";
}

std::vector<std::pair<int, int>> multiplicities(const Partition& p) {
  std::vector<std::pair<int, int>> out;
  for (int part : p) {
    if (!out.empty() && out.back().first == part) ++out.back().second;
    else out.emplace_back(part, 1);
  }
  return out;
}

// ---------------------------------------------------------------- data

DualGroupDatum DualGroupDatum::make(GroupKind kind, int n) {
  DualGroupDatum d;
  d.kind = kind;
  switch (kind) {
    case GroupKind::SL2:
      d.n = 2;
      d.group = "SL2";
      d.dual_group = "PGL2";
      d.action = TorusAction::inversion();
      d.classes = {{"e", {}}, {"c0", {}}};
      break;
    case GroupKind::SO5:
      d.n = 5;
      d.group = "SO5";
      d.dual_group = "Sp4";
      d.action = TorusAction::dual_torus(*Presentation::make({Family::ExtendedAffineB2, 2}));
      d.classes = {{"e", {}}, {"c1", {}}, {"c2", {}}, {"c0", {}}};
      break;
    case GroupKind::GL:
    case GroupKind::PGL: {
      const bool gl = kind == GroupKind::GL;
      if (n < 2 || n > 6) throw std::invalid_argument("n must lie in 2..6");
      d.n = n;
      d.group = (gl ? "GL" : "PGL") + std::to_string(n);
      d.dual_group = (gl ? "GL" : "SL") + std::to_string(n);
      d.action = TorusAction::symmetric(n, !gl);
      for (auto& p : partitions(n)) d.classes.push_back({to_string(p), p});
      break;
    }
  }
  d.torus_rank = d.action.rank();
  return d;
}

DualGroupDatum DualGroupDatum::from_tag(const FamilyTag& tag) {
  switch (tag.family) {
    case Family::InfiniteDihedral: return make(GroupKind::SL2);
    case Family::ExtendedAffineB2: return make(GroupKind::SO5);
    case Family::ExtendedAffineA: return make(GroupKind::GL, tag.n);
    case Family::ExtendedAffineAPrime: return make(GroupKind::PGL, tag.n);
    default: throw std::invalid_argument("no dual group datum for " + tag.name());
  }
}

// ---------------------------------------------------------------- centralizers

std::int64_t ReductiveDescriptor::component_group_order() const {
  switch (kind) {
    case Kind::GLProductInSL: {
      // kernel of the character Π det_r^{μ_r} on Π GL(n_r): π_0 = Z / (Smith invariant)
      IntMatrix row(1, static_cast<int>(weights.size()));
      for (std::size_t i = 0; i < weights.size(); ++i) row(0, static_cast<int>(i)) = weights[i];
      auto s = smith_normal_form(row);
      return s.invariants.empty() ? 0 : s.invariants.front();
    }
    case Kind::FiniteCyclic: return order;
    case Kind::TwoGroupTimesSL2:
    case Kind::TwoGroupSemidirectGm: return 2;
    default: return 1;
  }
}

std::string ReductiveDescriptor::to_string() const {
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  switch (kind) {
    case Kind::GLProduct: return "GLProduct(" + list(blocks) + ")";
    case Kind::GLProductInSL: return "GLProductInSL(" + list(blocks) + ";" + list(weights) + ")";
    case Kind::FiniteCyclic: return "FiniteCyclic(" + std::to_string(order) + ")";
    case Kind::TwoGroupTimesSL2: return "TwoGroupTimesSL2";
    case Kind::TwoGroupSemidirectGm: return "TwoGroupSemidirectGm";
    case Kind::SpFull: return "SpFull";
    case Kind::FullDual: return "FullDual(" + std::to_string(rank) + "," + weyl + ")";
  }
  return "?";
}

ReductiveDescriptor centralizer_reductive(const DualGroupDatum& d, const UnipotentClass& c) {
  ReductiveDescriptor r;
  using K = ReductiveDescriptor::Kind;
  switch (d.kind) {
    case GroupKind::SL2:
      if (c.tag == "e") {
        r.kind = K::FiniteCyclic;
        r.order = 2;
      } else if (c.tag == "c0") {
        r.kind = K::FullDual;
        r.rank = 1;
        r.weyl = "Z/2";
      } else {
        throw std::invalid_argument("unknown class " + c.tag + " for SL2");
      }
      return r;
    case GroupKind::SO5:
      if (c.tag == "e") {
        r.kind = K::FiniteCyclic;
        r.order = 2;
      } else if (c.tag == "c1") {
        r.kind = K::TwoGroupSemidirectGm;
      } else if (c.tag == "c2") {
        r.kind = K::TwoGroupTimesSL2;
      } else if (c.tag == "c0") {
        r.kind = K::SpFull;
        r.rank = 2;
        r.weyl = d.action.group_label();
      } else {
        throw std::invalid_argument("unknown class " + c.tag + " for SO5");
      }
      return r;
    case GroupKind::GL:
    case GroupKind::PGL: {
      if (!is_partition(c.partition) || std::accumulate(c.partition.begin(), c.partition.end(), 0) != d.n)
        throw std::invalid_argument("unknown class " + c.tag + " for " + d.group);
      Partition mu = dual_partition(c.partition);
      for (auto [part, mult] : multiplicities(mu)) {
        r.blocks.push_back(mult);
        r.weights.push_back(part);
      }
      if (d.kind == GroupKind::GL) {
        r.kind = K::GLProduct;
        r.weights.clear();
      } else if (r.blocks.size() == 1 && r.blocks.front() == 1) {
        // GL(1) with det^n = 1: the centre
        r.kind = K::FiniteCyclic;
        r.order = r.weights.front();
        r.blocks.clear();
        r.weights.clear();
      } else {
        r.kind = K::GLProductInSL;
      }
      return r;
    }
  }
  throw std::invalid_argument("unsupported group");
}

// ---------------------------------------------------------------- representation rings

std::vector<Descriptor> crossed_product_components() {
  auto expect = [](bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("crossed product check failed: " + what);
  };
  for (Rational z : {Rational(2), Rational(1, 3), Rational(-5)})
    expect(evaluate_crossed_module(z).simple_dims() == std::vector<int>{2}, "generic point " + to_string(z));
  for (Rational z : {Rational(1), Rational(-1)})
    expect(evaluate_crossed_module(z).simple_dims() == std::vector<int>{1, 1}, "special point " + to_string(z));
  auto id = spectrum_map(Matrix2::identity());
  expect(id.m == Matrix2::identity() && id.at_plus_one == 1 && id.at_minus_one == 1, "unit of the spectrum map");
  auto alpha = evaluate_module(ModulePoint::parse("alpha"));
  expect(alpha.simple_dims() == std::vector<int>{2}, "module at the alpha class");
  // ℂ (the extra point), then M_2(L) ⊕ ℂ ⊕ ℂ
  return {Descriptor::point(), Descriptor::point(), Descriptor::point(), Descriptor::line_mod_inversion()};
}

RepRing rep_ring_descriptor(const ReductiveDescriptor& d) {
  using K = ReductiveDescriptor::Kind;
  RepRing r;
  switch (d.kind) {
    case K::GLProduct:
      r.components.push_back(Descriptor::sym_product(d.blocks));
      break;
    case K::FiniteCyclic:
      r.components.assign(static_cast<std::size_t>(d.order), Descriptor::point());
      break;
    case K::TwoGroupTimesSL2:
      r.components = {Descriptor::line_mod_inversion(), Descriptor::line_mod_inversion()};
      break;
    case K::TwoGroupSemidirectGm:
      r.components = crossed_product_components();
      break;
    case K::SpFull:
    case K::FullDual:
      if (d.rank == 1) r.components.push_back(Descriptor::line_mod_inversion());
      else r.components.push_back(Descriptor::torus_mod_group(d.rank, d.weyl));
      break;
    case K::GLProductInSL: {
      const std::int64_t pi0 = d.component_group_order();
      if (pi0 != 1) {
        r.disconnected = true;
        r.note = d.to_string() + " has component group of order " + std::to_string(pi0);
        break;
      }
      const int dim = std::accumulate(d.blocks.begin(), d.blocks.end(), 0) - 1;
      const std::string weyl = symmetric_label(d.blocks);
      if (dim == 0) r.components.push_back(Descriptor::point());
      else if (dim == 1) r.components.push_back(weyl == "1" ? Descriptor::free_line() : Descriptor::line_mod_inversion());
      else r.components.push_back(Descriptor::torus_mod_group(dim, weyl));
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------- matcher

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Discrepancy: return "DISCREPANCY";
  }
  return "?";
}

MatchReport match_conjecture(GroupKind kind, int n) {
  if (kind == GroupKind::GL && (n < 2 || n > 6)) throw std::invalid_argument("GL(n) matching supports 2 ≤ n ≤ 6");
  if (kind == GroupKind::PGL && (n < 2 || n > 5)) throw std::invalid_argument("PGL(n) matching supports 2 ≤ n ≤ 5");
  DualGroupDatum d = DualGroupDatum::make(kind, n);
  MatchReport rep;
  rep.group = d.group;
  bool disconnected = false;
  for (const auto& c : d.classes) {
    auto f = centralizer_reductive(d, c);
    auto r = rep_ring_descriptor(f);
    if (r.disconnected) {
      disconnected = true;
      rep.notes.push_back("class " + c.tag + ": " + r.note + "; expected a connected group");
      rep.records.push_back({"cells", c.tag, -1, f.to_string() + " [disconnected]"});
      continue;
    }
    for (const auto& x : r.components) {
      rep.records.push_back({"cells", c.tag, x.dimension(), x.to_string()});
      ++rep.cell_side[x];
    }
  }
  auto comps = extended_quotient(d.action);
  for (const auto& c : comps) {
    rep.records.push_back({"extquot", c.class_tag, c.dim, c.descriptor.to_string()});
    ++rep.extquot_side[c.descriptor];
  }
  bool ok = !disconnected && rep.cell_side == rep.extquot_side;
  if (kind == GroupKind::GL) {
    // λ ↔ the class of cycle type dual(λ), one component each
    for (const auto& c : d.classes) {
      std::string tag = to_string(dual_partition(c.partition));
      auto want = rep_ring_descriptor(centralizer_reductive(d, c)).components.front();
      int hits = 0;
      for (const auto& x : comps)
        if (x.class_tag == tag && x.descriptor == want) ++hits;
      if (hits != 1) {
        ok = false;
        rep.notes.push_back("partition " + c.tag + " has " + std::to_string(hits) + " matching components");
      }
    }
    if (static_cast<std::int64_t>(comps.size()) != partition_count(n)) ok = false;
  }
  if (kind == GroupKind::SO5) {
    const auto classes = conjugacy_classes(d.action).size();
    rep.notes.push_back(std::to_string(d.classes.size()) + " two-sided cells, " + std::to_string(classes) +
                        " conjugacy classes in W_f");
    if (d.classes.size() != 4 || classes != 5) ok = false;
  }
  if (disconnected) {
    rep.verdict = Verdict::Discrepancy;
  } else {
    rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
  }
  return rep;
}

BernsteinPoint bernstein_point_gl(const std::vector<int>& exponents, const std::vector<int>& torsion) {
  if (exponents.empty() || exponents.size() != torsion.size())
    throw std::invalid_argument("one torsion number per exponent");
  BernsteinPoint b;
  std::vector<ExtQuotComponent> acc{ExtQuotComponent{}};
  acc.front().descriptor = Descriptor::sym_product({});
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const int e = exponents[i], r = torsion[i];
    if (e < 1 || r < 1) throw std::invalid_argument("exponents and torsion numbers must be positive");
    if (e > 6) throw std::invalid_argument("exponent too large");
    b.hecke_factors.push_back("H(~A" + std::to_string(e - 1) + ", q^" + std::to_string(r) + ")");
    auto factor = extended_quotient(TorusAction::symmetric(e));
    std::vector<ExtQuotComponent> next;
    for (const auto& a : acc)
      for (const auto& f : factor) {
        ExtQuotComponent c;
        c.class_tag = a.class_tag.empty() ? f.class_tag : a.class_tag + "x" + f.class_tag;
        c.dim = a.dim + f.dim;
        std::vector<int> parts = a.descriptor.parts;
        parts.insert(parts.end(), f.descriptor.parts.begin(), f.descriptor.parts.end());
        c.descriptor = Descriptor::sym_product(parts);
        next.push_back(std::move(c));
      }
    acc = std::move(next);
  }
  b.components = std::move(acc);
  return b;
}

}  // namespace hx
