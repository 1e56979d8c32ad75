#include "hx/coxeter.hpp"

#include "hx/rational.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hx {

namespace {

struct RootDatum {
  int rank = 0;
  std::vector<IntVector> pos_roots;    // covectors
  std::vector<IntVector> pos_coroots;  // vectors, paired with pos_roots
  std::vector<int> simple;             // indices into pos_roots
  int highest = 0;                     // index of the highest root
};

// Type A_{n-1} roots e_i - e_j on Z^n (GL(n), also used for finite type A).
RootDatum type_a_gl(int n) {
  RootDatum d;
  d.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      IntVector a(static_cast<std::size_t>(n), 0);
      a[static_cast<std::size_t>(i)] = 1;
      a[static_cast<std::size_t>(j)] = -1;
      if (j == i + 1) d.simple.push_back(static_cast<int>(d.pos_roots.size()));
      if (i == 0 && j == n - 1) d.highest = static_cast<int>(d.pos_roots.size());
      d.pos_roots.push_back(a);
      d.pos_coroots.push_back(a);
    }
  return d;
}

// Type A_{n-1} on the cocharacter lattice of PGL(n): Z^n / Z(1,...,1), with
// representatives normalized to last coordinate 0, i.e. Z^{n-1}.
RootDatum type_a_pgl(int n) {
  RootDatum d;
  const int r = n - 1;
  d.rank = r;
  auto project = [&](const IntVector& full) {
    // subtract last coordinate times (1,...,1) and drop it
    IntVector v(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) v[static_cast<std::size_t>(k)] = full[static_cast<std::size_t>(k)] - full[static_cast<std::size_t>(r)];
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      IntVector full(static_cast<std::size_t>(n), 0);
      full[static_cast<std::size_t>(i)] = 1;
      full[static_cast<std::size_t>(j)] = -1;
      // covector: restriction of e_i - e_j to vectors with last coordinate 0
      IntVector cov(full.begin(), full.begin() + r);
      if (j == i + 1) d.simple.push_back(static_cast<int>(d.pos_roots.size()));
      if (i == 0 && j == n - 1) d.highest = static_cast<int>(d.pos_roots.size());
      d.pos_roots.push_back(cov);
      d.pos_coroots.push_back(project(full));
    }
  return d;
}

// B2 on the cocharacter lattice Z^2 of SO(5): roots ±e1±e2, ±e1, ±e2.
RootDatum type_b2() {
  RootDatum d;
  d.rank = 2;
  d.pos_roots = {{1, -1}, {0, 1}, {1, 1}, {1, 0}};
  d.pos_coroots = {{1, -1}, {0, 2}, {1, 1}, {2, 0}};
  d.simple = {0, 1};
  d.highest = 2;
  return d;
}

RootDatum type_a1_coroot() {
  RootDatum d;
  d.rank = 1;
  d.pos_roots = {{2}};
  d.pos_coroots = {{1}};
  d.simple = {0};
  d.highest = 0;
  return d;
}

IntMatrix reflection(const IntVector& root, const IntVector& coroot) {
  const int r = static_cast<int>(root.size());
  IntMatrix m = IntMatrix::identity(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m(i, j) -= coroot[static_cast<std::size_t>(i)] * root[static_cast<std::size_t>(j)];
  return m;
}

std::int64_t pairing(const IntVector& lambda, const IntVector& root) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) s += lambda[i] * root[i];
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(c[i], b[i]);
  return c;
}

}  // namespace

std::string FamilyTag::name() const {
  switch (family) {
    case Family::InfiniteDihedral: return "infdihedral";
    case Family::ExtendedAffineA: return "gl" + std::to_string(n);
    case Family::ExtendedAffineAPrime: return "pgl" + std::to_string(n);
    case Family::ExtendedAffineB2: return "so5";
    case Family::FiniteA: return "a" + std::to_string(n);
    case Family::FiniteB2: return "b2";
  }
  return "?";
}

FamilyTag FamilyTag::parse(const std::string& s) {
  auto number = [&](std::size_t from) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s.substr(from), &used);
      if (used != s.size() - from) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad family size in '" + s + "'");
    }
  };
  if (s == "infdihedral" || s == "sl2") return {Family::InfiniteDihedral, 1};
  if (s == "so5") return {Family::ExtendedAffineB2, 2};
  if (s == "b2") return {Family::FiniteB2, 2};
  if (s.rfind("pgl", 0) == 0) return {Family::ExtendedAffineAPrime, number(3)};
  if (s.rfind("gl", 0) == 0) return {Family::ExtendedAffineA, number(2)};
  if (s.rfind("a", 0) == 0) return {Family::FiniteA, number(1)};
  throw std::invalid_argument("unknown family '" + s + "'");
}

std::shared_ptr<const Presentation> Presentation::make(FamilyTag tag, std::vector<int> weights) {
  std::shared_ptr<Presentation> p(new Presentation());
  p->build(tag, std::move(weights));
  return p;
}

void Presentation::build(FamilyTag tag, std::vector<int> weights) {
  tag_ = tag;
  RootDatum d;
  switch (tag.family) {
    case Family::InfiniteDihedral: d = type_a1_coroot(); break;
    case Family::ExtendedAffineA:
      if (tag.n < 1 || tag.n > 6) throw std::invalid_argument("GL(n) supported for 1 <= n <= 6");
      d = type_a_gl(tag.n);
      break;
    case Family::ExtendedAffineAPrime:
      if (tag.n < 2 || tag.n > 6) throw std::invalid_argument("PGL(n) supported for 2 <= n <= 6");
      d = type_a_pgl(tag.n);
      break;
    case Family::ExtendedAffineB2: d = type_b2(); break;
    case Family::FiniteA:
      if (tag.n < 1 || tag.n > 5) throw std::invalid_argument("finite A(n) supported for 1 <= n <= 5");
      d = type_a_gl(tag.n + 1);
      break;
    case Family::FiniteB2: d = type_b2(); break;
  }
  affine_ = tag.family != Family::FiniteA && tag.family != Family::FiniteB2;
  rank_ = d.rank;
  pos_roots_ = d.pos_roots;
  for (int k : d.simple) {
    simple_roots_.push_back(d.pos_roots[static_cast<std::size_t>(k)]);
    simple_coroots_.push_back(d.pos_coroots[static_cast<std::size_t>(k)]);
  }
  std::vector<IntMatrix> simple_refl;
  for (int k : d.simple) simple_refl.push_back(reflection(d.pos_roots[static_cast<std::size_t>(k)], d.pos_coroots[static_cast<std::size_t>(k)]));
  build_finite_group(simple_refl);

  auto fin_index = [&](const IntMatrix& m) {
    auto it = std::find(fin_.begin(), fin_.end(), m);
    if (it == fin_.end()) throw std::logic_error("reflection outside the finite Weyl group");
    return static_cast<int>(it - fin_.begin());
  };
  IntVector zero(static_cast<std::size_t>(rank_), 0);
  for (std::size_t i = 0; i < simple_refl.size(); ++i) {
    gens_.push_back(Element{zero, fin_index(simple_refl[i])});
    gen_names_.push_back("s" + std::to_string(i + 1));
  }
  if (affine_) {
    const auto& theta = d.pos_roots[static_cast<std::size_t>(d.highest)];
    const auto& theta_v = d.pos_coroots[static_cast<std::size_t>(d.highest)];
    gens_.push_back(Element{theta_v, fin_index(reflection(theta, theta_v))});
    gen_names_.push_back(tag.family == Family::InfiniteDihedral ? "s2" : "s0");
  }

  const int g = generator_count();
  coxeter_.assign(static_cast<std::size_t>(g), std::vector<int>(static_cast<std::size_t>(g), 1));
  for (int s = 0; s < g; ++s)
    for (int t = 0; t < g; ++t) {
      if (s == t) continue;
      Element st = multiply(gens_[static_cast<std::size_t>(s)], gens_[static_cast<std::size_t>(t)]);
      Element acc = st;
      int order = 1;
      while (acc != identity() && order <= 24) {
        acc = multiply(acc, st);
        ++order;
      }
      coxeter_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = order > 24 ? 0 : order;
    }

  if (weights.empty()) weights.assign(static_cast<std::size_t>(g), 1);
  if (static_cast<int>(weights.size()) != g) throw std::invalid_argument("weight function needs one value per generator");
  for (int w : weights)
    if (w < 0) throw std::invalid_argument("weights must be non-negative");
  for (int s = 0; s < g; ++s)
    for (int t = 0; t < g; ++t) {
      int m = coxeter_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      if (m > 0 && m % 2 == 1 && weights[static_cast<std::size_t>(s)] != weights[static_cast<std::size_t>(t)])
        throw std::invalid_argument("weights must agree on conjugate generators");
    }
  weights_ = std::move(weights);

  build_omega();
  for (const auto& perm : omega_perm_)
    for (int s = 0; s < g; ++s)
      if (weights_[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])] != weights_[static_cast<std::size_t>(s)])
        throw std::invalid_argument("weights must be invariant under the length-zero subgroup");
}

void Presentation::build_finite_group(const std::vector<IntMatrix>& simple) {
  std::map<IntMatrix, int> seen;
  fin_.push_back(IntMatrix::identity(rank_));
  seen[fin_[0]] = 0;
  for (std::size_t k = 0; k < fin_.size(); ++k)
    for (const auto& s : simple) {
      IntMatrix m = fin_[k] * s;
      if (!seen.count(m)) {
        seen[m] = static_cast<int>(fin_.size());
        fin_.push_back(m);
      }
    }
  const std::size_t n = fin_.size();
  fin_mul_.assign(n * n, 0);
  fin_inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int c = seen.at(fin_[a] * fin_[b]);
      fin_mul_[a * n + b] = c;
      if (c == 0) fin_inv_[a] = static_cast<int>(b);
    }
  std::map<IntVector, int> root_index;
  for (std::size_t k = 0; k < pos_roots_.size(); ++k) root_index[pos_roots_[k]] = static_cast<int>(k);
  inv_keeps_positive_.assign(n, std::vector<char>(pos_roots_.size(), 0));
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t k = 0; k < pos_roots_.size(); ++k) {
      // (w^-1 α)(x) = α(w x): row vector α times the matrix of w
      const auto& a = pos_roots_[k];
      IntVector b(static_cast<std::size_t>(rank_), 0);
      for (int j = 0; j < rank_; ++j)
        for (int i = 0; i < rank_; ++i) b[static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(i)] * fin_[w](i, j);
      inv_keeps_positive_[w][k] = root_index.count(b) ? 1 : 0;
    }
}

std::vector<std::int64_t> Presentation::omega_label(const IntVector& translation) const {
  IntVector y = coroot_snf_.U.apply(translation);
  std::vector<std::int64_t> label(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (static_cast<int>(i) < coroot_snf_.rank) {
      std::int64_t d = coroot_snf_.invariants[i];
      label[i] = ((y[i] % d) + d) % d;
    } else {
      label[i] = y[i];
    }
  }
  return label;
}

void Presentation::build_omega() {
  coroot_snf_ = smith_normal_form(IntMatrix::from_columns(simple_coroots_, rank_));
  if (!affine_) {
    omega_ = {identity()};
    omega_labels_ = {omega_label(identity().translation)};
    omega_perm_ = {std::vector<int>(static_cast<std::size_t>(generator_count()))};
    for (int s = 0; s < generator_count(); ++s) omega_perm_[0][static_cast<std::size_t>(s)] = s;
    return;
  }
  const bool gl = tag_.family == Family::ExtendedAffineA;
  omega_finite_ = !gl;
  // Search a box of small translations for length-zero elements.
  const int lo = gl ? 0 : -1;
  const int hi = 1;
  std::vector<Element> found;
  IntVector lambda(static_cast<std::size_t>(rank_), lo);
  for (;;) {
    for (int w = 0; w < finite_order(); ++w) {
      Element x{lambda, w};
      if (length(x) == 0) found.push_back(x);
    }
    int k = 0;
    while (k < rank_ && lambda[static_cast<std::size_t>(k)] == hi) lambda[static_cast<std::size_t>(k++)] = lo;
    if (k == rank_) break;
    ++lambda[static_cast<std::size_t>(k)];
  }
  if (gl) {
    // generator: the length-zero element whose translation sums to 1
    auto it = std::find_if(found.begin(), found.end(), [](const Element& x) {
      std::int64_t s = 0;
      for (auto c : x.translation) s += c;
      return s == 1;
    });
    if (it == found.end()) throw std::logic_error("no length-zero generator found for GL(n)");
    omega_ = {*it};
    omega_labels_ = {omega_label(it->translation)};
  } else {
    std::sort(found.begin(), found.end());
    // identity first
    auto id = std::find(found.begin(), found.end(), identity());
    std::rotate(found.begin(), id, id + 1);
    omega_ = found;
    std::int64_t expected = 1;
    for (auto d : coroot_snf_.invariants) expected *= d;
    if (static_cast<std::int64_t>(omega_.size()) != expected)
      throw std::logic_error("length-zero subgroup has unexpected order");
    for (const auto& w : omega_) omega_labels_.push_back(omega_label(w.translation));
    // order Ω as powers of a generator when cyclic
    for (std::size_t gidx = 1; gidx < omega_.size(); ++gidx) {
      std::vector<Element> powers{identity()};
      Element acc = omega_[gidx];
      while (acc != identity()) {
        powers.push_back(acc);
        acc = multiply(acc, omega_[gidx]);
      }
      if (powers.size() == omega_.size()) {
        omega_ = powers;
        omega_labels_.clear();
        for (const auto& w : omega_) omega_labels_.push_back(omega_label(w.translation));
        break;
      }
    }
  }
  for (const auto& w : omega_) {
    if (gl) {
      // conjugation permutation for the generator only
    }
    std::vector<int> perm(static_cast<std::size_t>(generator_count()));
    Element winv = inverse(w);
    for (int s = 0; s < generator_count(); ++s) {
      Element c = multiply(multiply(w, gens_[static_cast<std::size_t>(s)]), winv);
      auto it = std::find(gens_.begin(), gens_.end(), c);
      if (it == gens_.end()) throw std::logic_error("length-zero element does not normalize the generators");
      perm[static_cast<std::size_t>(s)] = static_cast<int>(it - gens_.begin());
    }
    omega_perm_.push_back(perm);
  }
}

bool Presentation::equal_parameters() const {
  return std::all_of(weights_.begin(), weights_.end(), [&](int w) { return w == weights_.front(); });
}

Element Presentation::identity() const { return Element{IntVector(static_cast<std::size_t>(rank_), 0), 0}; }

Element Presentation::multiply(const Element& x, const Element& y) const {
  // (t_λ u)(t_μ w) = t_{λ + uμ} (uw)
  return Element{add(x.translation, fin_[static_cast<std::size_t>(x.fin)].apply(y.translation)), finite_mul(x.fin, y.fin)};
}

Element Presentation::inverse(const Element& x) const {
  // (t_λ u)^-1 = t_{-u^-1 λ} u^-1
  int ui = finite_inverse(x.fin);
  IntVector t = fin_[static_cast<std::size_t>(ui)].apply(x.translation);
  for (auto& c : t) c = -c;
  return Element{t, ui};
}

Element Presentation::omega_power(int k) const {
  Element base = k >= 0 ? omega_.at(omega_.size() > 1 ? 1 : 0) : inverse(omega_.at(omega_.size() > 1 ? 1 : 0));
  if (tag_.family == Family::ExtendedAffineA) base = k >= 0 ? omega_[0] : inverse(omega_[0]);
  Element acc = identity();
  for (int i = 0; i < std::abs(k); ++i) acc = multiply(acc, base);
  return acc;
}

int Presentation::length(const Element& x) const {
  if (!affine_ && std::any_of(x.translation.begin(), x.translation.end(), [](auto c) { return c != 0; }))
    throw std::invalid_argument("finite Weyl group element with a translation part");
  const auto& keeps = inv_keeps_positive_[static_cast<std::size_t>(x.fin)];
  std::int64_t total = 0;
  for (std::size_t k = 0; k < pos_roots_.size(); ++k) {
    std::int64_t m = pairing(x.translation, pos_roots_[k]);
    total += keeps[k] ? std::abs(m) : std::abs(m - 1);
  }
  return static_cast<int>(total);
}

int Presentation::weighted_length(const Element& x) const {
  int total = 0;
  for (int s : reduced_word(x).generators) total += weights_[static_cast<std::size_t>(s)];
  return total;
}

int Presentation::omega_part(const Element& x) const {
  auto label = omega_label(x.translation);
  if (!omega_finite_) {
    // free rank-one quotient: the last coordinate carries the power
    std::int64_t base = omega_labels_[0].back();
    if (base == 0 || label.back() % base != 0) throw std::logic_error("cannot resolve Ω-part");
    return static_cast<int>(label.back() / base);
  }
  for (std::size_t i = 0; i < omega_labels_.size(); ++i)
    if (omega_labels_[i] == label) return static_cast<int>(i);
  throw std::logic_error("translation class without a length-zero representative");
}

bool Presentation::in_affine_subgroup(const Element& x) const {
  auto label = omega_label(x.translation);
  return std::all_of(label.begin(), label.end(), [](auto c) { return c == 0; });
}

ReducedWord Presentation::reduced_word(const Element& x) const {
  ReducedWord rw;
  Element y = x;
  int l = length(y);
  while (l > 0) {
    bool stepped = false;
    for (int s = 0; s < generator_count(); ++s) {
      Element z = multiply(gens_[static_cast<std::size_t>(s)], y);
      int lz = length(z);
      if (lz < l) {
        rw.generators.push_back(s);
        y = std::move(z);
        l = lz;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw std::logic_error("no descent found for an element of positive length");
  }
  if (omega_finite_) {
    auto it = std::find(omega_.begin(), omega_.end(), y);
    if (it == omega_.end()) throw std::logic_error("length-zero remainder outside Ω");
    rw.omega = static_cast<int>(it - omega_.begin());
  } else {
    rw.omega = omega_part(y);
  }
  return rw;
}

Element Presentation::from_word(const std::vector<int>& gens, int omega) const {
  Element x = identity();
  for (int s : gens) x = multiply(x, gens_.at(static_cast<std::size_t>(s)));
  return multiply(x, omega_finite_ ? omega_.at(static_cast<std::size_t>(omega)) : omega_power(omega));
}

std::string Presentation::word_string(const std::vector<int>& gens) const {
  if (gens.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ".";
    out += gen_names_[static_cast<std::size_t>(gens[i])];
  }
  return out;
}

std::string Presentation::finite_name(int fin) const {
  // reduced word of the finite part in the simple reflections
  Element x{IntVector(static_cast<std::size_t>(rank_), 0), fin};
  std::vector<int> word;
  int l = 0;
  const int nsimple = static_cast<int>(simple_roots_.size());
  for (std::size_t k = 0; k < pos_roots_.size(); ++k)
    if (!inv_keeps_positive_[static_cast<std::size_t>(fin)][k]) ++l;
  while (l > 0) {
    for (int s = 0; s < nsimple; ++s) {
      int f = finite_mul(gens_[static_cast<std::size_t>(s)].fin, x.fin);
      int lf = 0;
      for (std::size_t k = 0; k < pos_roots_.size(); ++k)
        if (!inv_keeps_positive_[static_cast<std::size_t>(f)][k]) ++lf;
      if (lf < l) {
        word.push_back(s);
        x.fin = f;
        l = lf;
        break;
      }
    }
  }
  return word_string(word);
}

std::unordered_map<Element, int, ElementHash> Presentation::bfs_lengths(int radius) const {
  std::unordered_map<Element, int, ElementHash> dist;
  std::deque<Element> queue;
  std::vector<Element> starts = omega_finite_ ? omega_ : std::vector<Element>{identity()};
  for (const auto& w : starts) {
    dist[w] = 0;
    queue.push_back(w);
  }
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    int d = dist[x];
    if (d == radius) continue;
    for (const auto& s : gens_) {
      Element y = multiply(s, x);
      if (!dist.count(y)) {
        dist[y] = d + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

// ---------------------------------------------------------------- Ball

Ball::Ball(PresentationPtr pres, int radius) : pres_(std::move(pres)), radius_(radius) {
  if (radius < 0) throw std::invalid_argument("ball radius must be non-negative");
  if (!pres_->omega_finite()) throw std::domain_error("length balls need a finite length-zero subgroup (" + pres_->tag().name() + ")");
  const auto& P = *pres_;
  std::vector<Element> shell = P.omega();
  std::sort(shell.begin(), shell.end());
  for (int k = 0;; ++k) {
    elems_.insert(elems_.end(), shell.begin(), shell.end());
    if (k == radius) break;
    std::set<Element> next;
    for (const auto& x : shell)
      for (const auto& s : P.generators()) {
        Element y = P.multiply(s, x);
        if (P.length(y) == k + 1) next.insert(y);
      }
    shell.assign(next.begin(), next.end());
    if (shell.empty()) break;  // finite group exhausted
  }
  const int n = size();
  for (int i = 0; i < n; ++i) index_[elems_[static_cast<std::size_t>(i)]] = i;
  len_.resize(static_cast<std::size_t>(n));
  inv_.resize(static_cast<std::size_t>(n));
  omega_of_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& x = elems_[static_cast<std::size_t>(i)];
    len_[static_cast<std::size_t>(i)] = P.length(x);
    inv_[static_cast<std::size_t>(i)] = index_of(P.inverse(x));
    omega_of_[static_cast<std::size_t>(i)] = P.omega_part(x);
  }
  identity_ = index_of(P.identity());
  for (const auto& w : P.omega()) omega_idx_.push_back(index_of(w));
  auto table = [&](auto&& mul, const std::vector<Element>& by) {
    std::vector<std::vector<int>> t(by.size(), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (std::size_t s = 0; s < by.size(); ++s)
      for (int i = 0; i < n; ++i) {
        auto it = index_.find(mul(by[s], elems_[static_cast<std::size_t>(i)]));
        if (it != index_.end()) t[s][static_cast<std::size_t>(i)] = it->second;
      }
    return t;
  };
  left_gen_ = table([&](const Element& s, const Element& x) { return P.multiply(s, x); }, P.generators());
  right_gen_ = table([&](const Element& s, const Element& x) { return P.multiply(x, s); }, P.generators());
  left_omega_ = table([&](const Element& s, const Element& x) { return P.multiply(s, x); }, P.omega());
  right_omega_ = table([&](const Element& s, const Element& x) { return P.multiply(x, s); }, P.omega());
}

std::optional<int> Ball::find(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Ball::index_of(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw std::out_of_range("element outside the ball of radius " + std::to_string(radius_));
  return it->second;
}

int Ball::product(int i, int j) const {
  auto r = find(pres_->multiply(element(i), element(j)));
  return r ? *r : -1;
}

std::vector<int> Ball::shell(int k) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (length(i) == k) out.push_back(i);
  return out;
}

std::string Ball::label(int i) const {
  ReducedWord rw = pres_->reduced_word(element(i));
  std::string s = pres_->word_string(rw.generators);
  if (rw.omega != 0) s += (rw.generators.empty() ? "" : "*") + std::string("w") + std::to_string(rw.omega);
  if (rw.generators.empty() && rw.omega != 0) s = "w" + std::to_string(rw.omega);
  return s;
}

std::string Ball::dump_line(int i) const {
  const auto& x = element(i);
  ReducedWord rw = pres_->reduced_word(x);
  std::ostringstream os;
  os << "word=" << pres_->word_string(rw.generators) << " omega=w" << rw.omega << " len=" << length(i) << " trans=(";
  for (std::size_t k = 0; k < x.translation.size(); ++k) os << (k ? "," : "") << x.translation[k];
  os << ") fin=" << pres_->finite_name(x.fin);
  return os.str();
}

std::string Ball::dump() const {
  std::string out;
  for (int i = 0; i < size(); ++i) out += dump_line(i) + "\n";
  return out;
}

}  // namespace hx
