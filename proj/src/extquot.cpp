#include "hx/extquot.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hx {

namespace {

Rational frac(const Rational& x) {
  BigInt n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
  BigInt r = n % d;
  if (r < 0) r += d;
  return Rational(r, d);
}

RootOfUnity root_of(const Rational& theta) {
  Rational f = frac(theta);
  return {static_cast<std::int64_t>(boost::multiprecision::denominator(f)),
          static_cast<std::int64_t>(boost::multiprecision::numerator(f))};
}

std::vector<Rational> act(const IntMatrix& m, const std::vector<Rational>& x) {
  std::vector<Rational> out(static_cast<std::size_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (int j = 0; j < m.cols(); ++j) s += Rational(m(i, j)) * x[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = frac(s);
  }
  return out;
}

std::vector<int> permutation_of(const IntMatrix& p) {
  std::vector<int> sigma(static_cast<std::size_t>(p.cols()), -1);
  for (int j = 0; j < p.cols(); ++j)
    for (int i = 0; i < p.rows(); ++i)
      if (p(i, j) == 1) sigma[static_cast<std::size_t>(j)] = i;
  return sigma;
}

bool is_permutation_matrix(const IntMatrix& p) {
  if (p.rows() != p.cols()) return false;
  for (int j = 0; j < p.cols(); ++j) {
    int ones = 0;
    for (int i = 0; i < p.rows(); ++i) {
      if (p(i, j) == 1) ++ones;
      else if (p(i, j) != 0) return false;
    }
    if (ones != 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& sigma) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(sigma.size(), 0);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = static_cast<int>(i); !seen[static_cast<std::size_t>(j)]; j = sigma[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = 1;
      c.push_back(j);
    }
    out.push_back(c);
  }
  return out;
}

std::string cycle_name(const std::vector<int>& sigma) {
  std::string out;
  for (const auto& c : cycles_of(sigma)) {
    if (c.size() == 1) continue;
    out += "(";
    for (std::size_t k = 0; k < c.size(); ++k) out += (k ? " " : "") + std::to_string(c[k] + 1);
    out += ")";
  }
  return out.empty() ? "e" : out;
}

std::vector<int> cycle_type(const std::vector<int>& sigma) {
  std::vector<int> t;
  for (const auto& c : cycles_of(sigma)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string partition_tag(const std::vector<int>& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + ")";
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// names of the eight signed permutations of Z^2
std::string b2_name(const IntMatrix& m) {
  static const std::vector<std::pair<IntMatrix, std::string>> table = {
      {IntMatrix{{1, 0}, {0, 1}}, "g1"},   {IntMatrix{{0, 1}, {1, 0}}, "g2"},   {IntMatrix{{-1, 0}, {0, 1}}, "g3"},
      {IntMatrix{{1, 0}, {0, -1}}, "g4"},  {IntMatrix{{0, 1}, {-1, 0}}, "g5"},  {IntMatrix{{-1, 0}, {0, -1}}, "g6"},
      {IntMatrix{{0, -1}, {1, 0}}, "g7"},  {IntMatrix{{0, -1}, {-1, 0}}, "g8"},
  };
  for (const auto& [k, v] : table)
    if (k == m) return v;
  return m.to_string();
}

}  // namespace

std::string to_string(const TorsionPoint& p) {
  std::string out = "d(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    if (p[i].order == 1) out += "1";
    else if (p[i].order == 2) out += "-1";
    else out += "e(" + std::to_string(p[i].exponent) + "/" + std::to_string(p[i].order) + ")";
  }
  return out + ")";
}

Descriptor Descriptor::sym_product(std::vector<int> parts) {
  std::sort(parts.rbegin(), parts.rend());
  Descriptor d;
  d.kind = Kind::SymProduct;
  d.parts = std::move(parts);
  return d;
}

int Descriptor::dimension() const {
  switch (kind) {
    case Kind::Point: return 0;
    case Kind::LineModInversion:
    case Kind::FreeLine: return 1;
    case Kind::SymProduct: return std::accumulate(parts.begin(), parts.end(), 0);
    case Kind::TorusModGroup: return torus_dim;
  }
  return 0;
}

std::string Descriptor::to_string() const {
  switch (kind) {
    case Kind::Point: return "Point";
    case Kind::LineModInversion: return "LineModInversion";
    case Kind::FreeLine: return "FreeLine";
    case Kind::SymProduct: {
      std::string s = "SymProduct(";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
      return s + ")";
    }
    case Kind::TorusModGroup: return "TorusModGroup(" + std::to_string(torus_dim) + "," + group + ")";
  }
  return "?";
}

std::string symmetric_label(std::vector<int> blocks) {
  std::sort(blocks.rbegin(), blocks.rend());
  std::string out;
  for (int b : blocks)
    if (b > 1) out += (out.empty() ? "S" : "xS") + std::to_string(b);
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- actions

TorusAction TorusAction::from_matrices(std::string group_label, std::vector<IntMatrix> ambient,
                                       std::vector<std::string> names, bool det_one) {
  if (ambient.empty()) throw std::invalid_argument("empty group");
  TorusAction a;
  a.label_ = std::move(group_label);
  a.ambient_rank_ = ambient.front().rows();
  a.det_one_ = det_one;
  a.rank_ = det_one ? a.ambient_rank_ - 1 : a.ambient_rank_;
  if (a.rank_ < 1) throw std::invalid_argument("torus of rank 0");
  a.perm_ = std::all_of(ambient.begin(), ambient.end(), is_permutation_matrix);
  std::map<IntMatrix, int> index;
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    const auto& m = ambient[i];
    if (m.rows() != a.ambient_rank_ || m.cols() != a.ambient_rank_) throw std::invalid_argument("matrix size mismatch");
    std::int64_t d = determinant(m);
    if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
    if (!index.emplace(m, static_cast<int>(i)).second) throw std::invalid_argument("repeated group element");
  }
  const int n = static_cast<int>(ambient.size());
  a.mul_.assign(static_cast<std::size_t>(n * n), -1);
  a.inv_.assign(static_cast<std::size_t>(n), -1);
  a.id_ = -1;
  for (int i = 0; i < n; ++i) {
    if (ambient[static_cast<std::size_t>(i)].is_identity()) a.id_ = i;
    for (int j = 0; j < n; ++j) {
      auto it = index.find(ambient[static_cast<std::size_t>(i)] * ambient[static_cast<std::size_t>(j)]);
      if (it == index.end()) throw std::invalid_argument("matrices are not closed under multiplication");
      a.mul_[static_cast<std::size_t>(i * n + j)] = it->second;
    }
  }
  if (a.id_ < 0) throw std::invalid_argument("identity missing");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.mul_[static_cast<std::size_t>(i * n + j)] == a.id_) a.inv_[static_cast<std::size_t>(i)] = j;
  if (det_one) {
    // sublattice {Σλ = 0} with basis e_j - e_last; it must be preserved
    const int r = a.rank_, last = a.ambient_rank_ - 1;
    for (const auto& m : ambient) {
      IntMatrix res(r, r);
      for (int j = 0; j < r; ++j) {
        std::int64_t sum = 0;
        for (int i = 0; i <= last; ++i) {
          std::int64_t v = m(i, j) - m(i, last);
          sum += v;
          if (i < last) res(i, j) = v;
        }
        if (sum != 0) throw std::invalid_argument("action does not preserve the determinant-one torus");
      }
      a.elems_.push_back(res);
    }
  } else {
    a.elems_ = ambient;
  }
  a.ambient_ = std::move(ambient);
  if (names.empty())
    for (int i = 0; i < n; ++i)
      names.push_back(a.perm_ ? cycle_name(permutation_of(a.ambient_[static_cast<std::size_t>(i)])) : "g" + std::to_string(i + 1));
  if (static_cast<int>(names.size()) != n) throw std::invalid_argument("one name per element");
  a.names_ = std::move(names);
  return a;
}

TorusAction TorusAction::inversion() {
  return from_matrices("Z/2", {IntMatrix{{1}}, IntMatrix{{-1}}}, {"e", "inv"});
}

TorusAction TorusAction::symmetric(int n, bool det_one) {
  if (n < 1 || n > 7) throw std::invalid_argument("symmetric group size out of range");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<IntMatrix> mats;
  do {
    IntMatrix p(n, n);
    for (int j = 0; j < n; ++j) p(sigma[static_cast<std::size_t>(j)], j) = 1;
    mats.push_back(p);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return from_matrices("S" + std::to_string(n), std::move(mats), {}, det_one);
}

TorusAction TorusAction::dual_torus(const Presentation& p) {
  const auto& tag = p.tag();
  switch (tag.family) {
    case Family::InfiniteDihedral: return inversion();
    case Family::ExtendedAffineA: return symmetric(tag.n, false);
    case Family::ExtendedAffineAPrime: return symmetric(tag.n, true);
    case Family::ExtendedAffineB2: {
      std::vector<IntMatrix> mats;
      std::vector<std::string> names;
      for (const auto& m : p.finite_matrices()) {
        // characters of the dual torus: contragredient, equal here since W(B2) is orthogonal
        mats.push_back(unimodular_inverse(m).transpose());
        names.push_back(b2_name(mats.back()));
      }
      // order elements by name for stable class tags
      std::vector<std::size_t> ord(mats.size());
      std::iota(ord.begin(), ord.end(), 0);
      std::sort(ord.begin(), ord.end(), [&](auto x, auto y) { return names[x] < names[y]; });
      std::vector<IntMatrix> m2;
      std::vector<std::string> n2;
      for (auto i : ord) {
        m2.push_back(mats[i]);
        n2.push_back(names[i]);
      }
      return from_matrices("W(B2)", std::move(m2), std::move(n2));
    }
    default: throw std::invalid_argument("no dual torus for " + tag.name());
  }
}

TorsionPoint TorusAction::ambient_point(const std::vector<Rational>& theta) const {
  TorsionPoint p;
  Rational sum = 0;
  for (int i = 0; i < rank_; ++i) {
    p.push_back(root_of(theta[static_cast<std::size_t>(i)]));
    sum += theta[static_cast<std::size_t>(i)];
  }
  if (det_one_) p.push_back(root_of(-sum));
  return p;
}

std::vector<ConjugacyClass> conjugacy_classes(const TorusAction& a) {
  const int n = a.order();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<ConjugacyClass> out;
  for (int g = 0; g < n; ++g) {
    if (cls[static_cast<std::size_t>(g)] >= 0) continue;
    ConjugacyClass c;
    c.representative = g;
    std::set<int> members;
    for (int h = 0; h < n; ++h) members.insert(a.mul(a.mul(h, g), a.inverse(h)));
    for (int m : members) cls[static_cast<std::size_t>(m)] = static_cast<int>(out.size());
    c.members.assign(members.begin(), members.end());
    for (int h = 0; h < n; ++h)
      if (a.mul(h, g) == a.mul(g, h)) c.centralizer.push_back(h);
    c.tag = a.permutation_action() ? partition_tag(cycle_type(permutation_of(a.ambient(g)))) : a.name(g);
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------- fixed loci

int FixedLocus::component_of(const std::vector<Rational>& theta) const {
  IntMatrix vinv = unimodular_inverse(smith_V);
  std::vector<Rational> phi(theta.size());
  for (int i = 0; i < vinv.rows(); ++i) {
    Rational s = 0;
    for (int j = 0; j < vinv.cols(); ++j) s += Rational(vinv(i, j)) * theta[static_cast<std::size_t>(j)];
    phi[static_cast<std::size_t>(i)] = s;
  }
  int idx = 0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    std::int64_t d = diag[i];
    if (d <= 1) continue;
    Rational k = phi[i] * d;
    if (boost::multiprecision::denominator(k) != 1) throw std::invalid_argument("point is not fixed");
    BigInt kk = boost::multiprecision::numerator(k) % d;
    if (kk < 0) kk += d;
    idx = idx * static_cast<int>(d) + static_cast<int>(kk);
  }
  return idx;
}

FixedLocus fixed_locus(const TorusAction& a, int g) {
  FixedLocus f;
  f.element = g;
  const int r = a.rank();
  IntMatrix A = a.matrix(g) - IntMatrix::identity(r);
  SmithForm s = smith_normal_form(A);
  f.smith_V = s.V;
  f.diag.assign(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) f.diag[static_cast<std::size_t>(i)] = i < s.D.rows() && i < s.D.cols() ? s.D(i, i) : 0;
  f.dim = static_cast<int>(std::count(f.diag.begin(), f.diag.end(), 0));
  for (auto d : f.diag)
    if (d > 1) {
      f.component_group.push_back(d);
      f.component_count *= d;
    }
  f.sublattice = integer_kernel(A);
  // enumerate φ_i = k_i/d_i in the same mixed radix as component_of
  std::vector<std::int64_t> k(static_cast<std::size_t>(r), 0);
  for (std::int64_t idx = 0; idx < f.component_count; ++idx) {
    std::int64_t rest = idx;
    for (int i = r - 1; i >= 0; --i) {
      std::int64_t d = f.diag[static_cast<std::size_t>(i)];
      if (d <= 1) {
        k[static_cast<std::size_t>(i)] = 0;
        continue;
      }
      k[static_cast<std::size_t>(i)] = rest % d;
      rest /= d;
    }
    std::vector<Rational> phi(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      std::int64_t d = f.diag[static_cast<std::size_t>(i)];
      phi[static_cast<std::size_t>(i)] = d > 1 ? Rational(k[static_cast<std::size_t>(i)], d) : Rational(0);
    }
    auto theta = act(s.V, phi);
    f.representatives.push_back(theta);
    f.points.push_back(a.ambient_point(theta));
  }
  return f;
}

// ---------------------------------------------------------------- census

namespace {

Descriptor describe(const TorusAction& a, const ConjugacyClass& c, const FixedLocus& f, const std::vector<int>& stab) {
  if (f.dim == 0) return Descriptor::point();
  if (a.permutation_action()) {
    auto cyc = cycles_of(permutation_of(a.ambient(c.representative)));
    std::vector<int> where(static_cast<std::size_t>(a.ambient_rank()));
    for (std::size_t i = 0; i < cyc.size(); ++i)
      for (int x : cyc[i]) where[static_cast<std::size_t>(x)] = static_cast<int>(i);
    std::set<std::vector<int>> image;
    for (int g : stab) {
      auto sigma = permutation_of(a.ambient(g));
      std::vector<int> on_cycles;
      for (const auto& cy : cyc) on_cycles.push_back(where[static_cast<std::size_t>(sigma[static_cast<std::size_t>(cy[0])])]);
      image.insert(on_cycles);
    }
    std::vector<int> orbit_of(cyc.size(), -1);
    std::vector<int> sizes;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (orbit_of[i] >= 0) continue;
      int sz = 0;
      for (std::size_t j = i; j < cyc.size(); ++j) {
        if (orbit_of[j] >= 0) continue;
        bool same = j == i;
        for (const auto& p : image) same = same || p[i] == static_cast<int>(j);
        if (same) {
          orbit_of[j] = static_cast<int>(sizes.size());
          ++sz;
        }
      }
      sizes.push_back(sz);
    }
    std::int64_t full = 1;
    for (int s : sizes) full *= factorial(s);
    const bool symmetric = full == static_cast<std::int64_t>(image.size());
    if (!a.det_one() && symmetric) return Descriptor::sym_product(sizes);
    if (f.dim >= 2)
      return Descriptor::torus_mod_group(f.dim, symmetric ? symmetric_label(sizes) : "order" + std::to_string(image.size()));
  }
  if (f.dim == 1) {
    IntVector k = f.sublattice.column(0);
    for (int g : stab) {
      IntVector gk = a.matrix(g).apply(k);
      bool neg = true;
      for (std::size_t i = 0; i < k.size(); ++i) neg = neg && gk[i] == -k[i];
      if (neg) return Descriptor::line_mod_inversion();
    }
    return Descriptor::free_line();
  }
  std::set<IntMatrix> image;
  for (int g : stab) image.insert(a.matrix(g) * f.sublattice);
  if (c.representative == a.identity() && static_cast<int>(image.size()) == a.order())
    return Descriptor::torus_mod_group(f.dim, a.group_label());
  return Descriptor::torus_mod_group(f.dim, "order" + std::to_string(image.size()));
}

// Z(γ)-orbits on components of X^γ
std::vector<std::vector<int>> component_orbits(const TorusAction& a, const ConjugacyClass& c, const FixedLocus& f) {
  const int m = static_cast<int>(f.component_count);
  std::vector<int> orbit(static_cast<std::size_t>(m), -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < m; ++i) {
    if (orbit[static_cast<std::size_t>(i)] >= 0) continue;
    std::set<int> o;
    for (int g : c.centralizer) o.insert(f.component_of(act(a.matrix(g), f.representatives[static_cast<std::size_t>(i)])));
    for (int j : o) orbit[static_cast<std::size_t>(j)] = static_cast<int>(out.size());
    out.emplace_back(o.begin(), o.end());
  }
  return out;
}

}  // namespace

std::vector<ExtQuotComponent> extended_quotient(const TorusAction& a) {
  std::vector<ExtQuotComponent> out;
  for (const auto& c : conjugacy_classes(a)) {
    FixedLocus f = fixed_locus(a, c.representative);
    for (const auto& orb : component_orbits(a, c, f)) {
      const int k = orb.front();
      std::vector<int> stab;
      for (int g : c.centralizer)
        if (f.component_of(act(a.matrix(g), f.representatives[static_cast<std::size_t>(k)])) == k) stab.push_back(g);
      ExtQuotComponent comp;
      comp.class_tag = c.tag;
      comp.representative = c.representative;
      comp.dim = f.dim;
      comp.descriptor = describe(a, c, f, stab);
      for (int j : orb) comp.orbit.push_back(f.points[static_cast<std::size_t>(j)]);
      out.push_back(std::move(comp));
    }
  }
  return out;
}

std::vector<std::vector<TorsionPoint>> torsion_orbit_census(const TorusAction& a, int g) {
  FixedLocus f = fixed_locus(a, g);
  if (f.dim != 0)
    throw std::invalid_argument("fixed locus of " + a.name(g) + " has dimension " + std::to_string(f.dim));
  ConjugacyClass c;
  c.representative = g;
  for (int h = 0; h < a.order(); ++h)
    if (a.mul(h, g) == a.mul(g, h)) c.centralizer.push_back(h);
  std::vector<std::vector<TorsionPoint>> out;
  for (const auto& orb : component_orbits(a, c, f)) {
    std::vector<TorsionPoint> pts;
    for (int j : orb) pts.push_back(f.points[static_cast<std::size_t>(j)]);
    out.push_back(std::move(pts));
  }
  return out;
}

std::vector<CensusRecord> census(const std::vector<ExtQuotComponent>& comps) {
  std::vector<CensusRecord> out;
  for (const auto& c : comps) {
    auto it = std::find_if(out.begin(), out.end(), [&](const CensusRecord& r) {
      return r.class_tag == c.class_tag && r.descriptor == c.descriptor;
    });
    if (it != out.end()) ++it->multiplicity;
    else out.push_back({c.class_tag, c.dim, c.descriptor, 1});
  }
  return out;
}

std::map<Descriptor, int> descriptor_multiset(const std::vector<ExtQuotComponent>& comps) {
  std::map<Descriptor, int> m;
  for (const auto& c : comps) ++m[c.descriptor];
  return m;
}

std::int64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
  return p[static_cast<std::size_t>(n)];
}

}  // namespace hx
