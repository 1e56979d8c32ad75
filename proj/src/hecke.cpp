#include "hx/hecke.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <unordered_map>

namespace hx {

LaurentZ HeckeElement::coeff(int i) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), i, [](const auto& t, int k) { return t.first < k; });
  if (it == terms.end() || it->first != i) return {};
  return it->second;
}

// ---------------------------------------------------------------- Accumulator

LaurentZ& Accumulator::at(int i) {
  auto k = static_cast<std::size_t>(i);
  if (!mark_[k]) {
    mark_[k] = 1;
    touched_.push_back(i);
  }
  return slot_[k];
}

void Accumulator::add(int i, const LaurentZ& c, std::int64_t scale, int shift) { at(i).axpy(scale, c, shift); }

void Accumulator::add_terms(const Terms& t, const LaurentZ& factor) {
  for (const auto& [i, c] : t) at(i) += c * factor;
}

Terms Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  Terms out;
  for (int i : touched_) {
    auto k = static_cast<std::size_t>(i);
    if (!slot_[k].is_zero()) out.emplace_back(i, std::move(slot_[k]));
    slot_[k] = LaurentZ();
    mark_[k] = 0;
  }
  touched_.clear();
  return out;
}

// ---------------------------------------------------------------- KLBasis

KLBasis::KLBasis(std::shared_ptr<const Ball> ball) : KLBasis(std::move(ball), NoCompute{}) {
  compute();
  build_wgraph();
}

KLBasis::KLBasis(std::shared_ptr<const Ball> ball, NoCompute) : ball_(std::move(ball)) {
  const auto& P = presentation();
  for (int s = 0; s < P.generator_count(); ++s) {
    if (P.weight(s) <= 0) throw std::invalid_argument("Kazhdan-Lusztig basis needs positive weights");
    if (P.weight(s) != 1) unit_weights_ = false;
  }
  const auto& om = P.omega();
  for (const auto& w : om) {
    auto it = std::find(om.begin(), om.end(), P.inverse(w));
    omega_inverse_.push_back(static_cast<int>(it - om.begin()));
  }
  for (int i = 0; i < size(); ++i) words_.push_back(P.reduced_word(ball_->element(i)));
}

bool KLBasis::left_descent(int s, int w) const {
  int sw = ball_->left_gen(s, w);
  return sw >= 0 && ball_->length(sw) < ball_->length(w);
}

bool KLBasis::right_descent(int s, int w) const {
  int ws = ball_->right_gen(s, w);
  return ws >= 0 && ball_->length(ws) < ball_->length(w);
}

LaurentZ KLBasis::p(int y, int w) const {
  const auto& t = c(w);
  auto it = std::lower_bound(t.begin(), t.end(), y, [](const auto& a, int k) { return a.first < k; });
  if (it == t.end() || it->first != y) return {};
  return it->second;
}

void KLBasis::compute() {
  const Ball& B = *ball_;
  const int n = size();
  c_.assign(static_cast<std::size_t>(n), {});
  Accumulator acc(n);
  // elements of W' first, in length order
  for (int w = 0; w < n; ++w) {
    if (B.omega_part(w) != 0) continue;
    if (B.length(w) == 0) {
      c_[static_cast<std::size_t>(w)] = {{w, LaurentZ(1)}};
      continue;
    }
    int s = 0;
    while (!left_descent(s, w)) ++s;
    const int wp = B.left_gen(s, w);
    const LaurentZ vs = v_s(s), vsi = vs.bar();
    for (const auto& [y, py] : c(wp)) {
      int sy = B.left_gen(s, y);
      acc.at(sy) += py;
      acc.at(y) += py * (B.length(sy) > B.length(y) ? vsi : vs);
    }
    // strip the non-negative parts, longest first
    for (int z = w - 1; z >= 0; --z) {
      const LaurentZ& q = acc.peek(z);
      if (q.is_zero() || q.degree() < 0) continue;
      LaurentZ mu = q.slice(0, q.degree()) + q.slice(1, q.degree()).bar();
      for (const auto& [y, pz] : c(z)) acc.at(y) -= mu * pz;
    }
    Terms t = acc.take();
    for (const auto& [y, py] : t) {
      bool ok = y == w ? py == LaurentZ(1) : py.degree() < 0;
      if (!ok) throw std::logic_error("Kazhdan-Lusztig recursion produced a non-triangular element");
    }
    c_[static_cast<std::size_t>(w)] = std::move(t);
  }
  for (int w = 0; w < n; ++w) {
    int k = B.omega_part(w);
    if (k == 0) continue;
    int w0 = B.right_omega(omega_inverse_[static_cast<std::size_t>(k)], w);
    Terms t;
    for (const auto& [y, py] : c(w0)) t.emplace_back(B.right_omega(k, y), py);
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    c_[static_cast<std::size_t>(w)] = std::move(t);
  }
}

Terms KLBasis::mu_by_expansion(int s, int w, bool left) const {
  const Ball& B = *ball_;
  int sw = left ? B.left_gen(s, w) : B.right_gen(s, w);
  if (sw < 0) throw BallOverflow("W-graph edge leaves the ball");
  Terms prod = left ? t_left_gen(s, c(w)) : t_right_gen(s, c(w));
  Accumulator acc(size());
  acc.add_terms(prod, LaurentZ(1));
  acc.add_terms(c(w), v_s(s).bar());
  if (B.length(sw) < B.length(w)) throw std::invalid_argument("mu_by_expansion: s is a descent of w");
  acc.add_terms(c(sw), LaurentZ(-1));
  return to_c({Basis::T, acc.take()}).terms;
}

void KLBasis::build_wgraph() {
  const Ball& B = *ball_;
  const int n = size();
  const int g = presentation().generator_count();
  mu_left_.assign(static_cast<std::size_t>(g), std::vector<std::optional<Terms>>(static_cast<std::size_t>(n)));
  mu_right_ = mu_left_;
  for (int s = 0; s < g; ++s)
    for (int w = 0; w < n; ++w)
      for (int side = 0; side < 2; ++side) {
        const bool left = side == 0;
        if (left ? left_descent(s, w) : right_descent(s, w)) continue;
        auto& slot = (left ? mu_left_ : mu_right_)[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)];
        if (unit_weights_) {
          // μ(z,w) is the coefficient of v^-1 in p_{z,w}
          Terms t;
          for (const auto& [z, pz] : c(w)) {
            if (z == w) continue;
            if (!(left ? left_descent(s, z) : right_descent(s, z))) continue;
            std::int64_t mu = pz.coeff(-1);
            if (mu != 0) t.emplace_back(z, LaurentZ(mu));
          }
          slot = std::move(t);
        } else if ((left ? B.left_gen(s, w) : B.right_gen(s, w)) >= 0) {
          slot = mu_by_expansion(s, w, left);
        }
      }
}

const std::optional<Terms>& KLBasis::mu_left(int s, int w) const {
  return mu_left_[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)];
}
const std::optional<Terms>& KLBasis::mu_right(int s, int w) const {
  return mu_right_[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)];
}

Terms KLBasis::t_left_gen(int s, const Terms& h) const {
  const Ball& B = *ball_;
  Accumulator acc(size());
  const LaurentZ vs = v_s(s), diff = vs - vs.bar();
  for (const auto& [y, py] : h) {
    int sy = B.left_gen(s, y);
    if (sy < 0) throw BallOverflow("T-basis product leaves the ball of radius " + std::to_string(B.radius()));
    acc.at(sy) += py;
    if (B.length(sy) < B.length(y)) acc.at(y) += py * diff;
  }
  return acc.take();
}

Terms KLBasis::t_right_gen(int s, const Terms& h) const {
  const Ball& B = *ball_;
  Accumulator acc(size());
  const LaurentZ vs = v_s(s), diff = vs - vs.bar();
  for (const auto& [y, py] : h) {
    int ys = B.right_gen(s, y);
    if (ys < 0) throw BallOverflow("T-basis product leaves the ball of radius " + std::to_string(B.radius()));
    acc.at(ys) += py;
    if (B.length(ys) < B.length(y)) acc.at(y) += py * diff;
  }
  return acc.take();
}

namespace {

Terms relabel(const Terms& h, const std::function<int(int)>& f) {
  Terms out;
  out.reserve(h.size());
  for (const auto& [y, py] : h) out.emplace_back(f(y), py);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

Terms KLBasis::t_left_omega(int w, const Terms& h) const {
  return relabel(h, [&](int y) { return ball_->left_omega(w, y); });
}
Terms KLBasis::t_right_omega(int w, const Terms& h) const {
  return relabel(h, [&](int y) { return ball_->right_omega(w, y); });
}
Terms KLBasis::c_left_omega(int w, const Terms& h) const { return t_left_omega(w, h); }
Terms KLBasis::c_right_omega(int w, const Terms& h) const { return t_right_omega(w, h); }

HeckeElement KLBasis::mul_T(const HeckeElement& a, const HeckeElement& b) const {
  if (a.basis != Basis::T || b.basis != Basis::T) throw std::invalid_argument("mul_T expects T-basis operands");
  Accumulator acc(size());
  for (const auto& [x, ax] : a.terms) {
    const auto& rw = words_[static_cast<std::size_t>(x)];
    Terms h = t_left_omega(rw.omega, b.terms);
    for (auto it = rw.generators.rbegin(); it != rw.generators.rend(); ++it) h = t_left_gen(*it, h);
    acc.add_terms(h, ax);
  }
  return {Basis::T, acc.take()};
}

HeckeElement KLBasis::to_c(const HeckeElement& t) const {
  if (t.basis == Basis::C) return t;
  Accumulator acc(size());
  acc.add_terms(t.terms, LaurentZ(1));
  Terms out;
  int top = t.terms.empty() ? -1 : t.terms.back().first;
  for (int u = top; u >= 0; --u) {
    LaurentZ a = acc.peek(u);
    if (a.is_zero()) continue;
    for (const auto& [y, py] : c(u)) acc.at(y) -= a * py;
    out.emplace_back(u, std::move(a));
  }
  if (!acc.take().empty()) throw std::logic_error("change of basis left a remainder");
  std::reverse(out.begin(), out.end());
  return {Basis::C, std::move(out)};
}

HeckeElement KLBasis::to_T(const HeckeElement& h) const {
  if (h.basis == Basis::T) return h;
  Accumulator acc(size());
  for (const auto& [u, a] : h.terms) acc.add_terms(c(u), a);
  return {Basis::T, acc.take()};
}

Terms KLBasis::c_left_gen(int s, const Terms& h) const {
  const Ball& B = *ball_;
  Accumulator acc(size());
  const LaurentZ vs = v_s(s), sum = vs + vs.bar();
  for (const auto& [u, a] : h) {
    int su = B.left_gen(s, u);
    if (su >= 0 && B.length(su) < B.length(u)) {
      acc.at(u) += a * sum;
      continue;
    }
    const auto& mu = mu_left(s, u);
    if (su < 0 || !mu) throw BallOverflow("c-basis product leaves the ball of radius " + std::to_string(B.radius()));
    acc.at(su) += a;
    for (const auto& [z, m] : *mu) acc.at(z) += m * a;
  }
  return acc.take();
}

Terms KLBasis::c_right_gen(int s, const Terms& h) const {
  const Ball& B = *ball_;
  Accumulator acc(size());
  const LaurentZ vs = v_s(s), sum = vs + vs.bar();
  for (const auto& [u, a] : h) {
    int us = B.right_gen(s, u);
    if (us >= 0 && B.length(us) < B.length(u)) {
      acc.at(u) += a * sum;
      continue;
    }
    const auto& mu = mu_right(s, u);
    if (us < 0 || !mu) throw BallOverflow("c-basis product leaves the ball of radius " + std::to_string(B.radius()));
    acc.at(us) += a;
    for (const auto& [z, m] : *mu) acc.at(z) += m * a;
  }
  return acc.take();
}

HeckeElement KLBasis::h_constants(int x, int y) const {
  return to_c(mul_T(kl_element(x), kl_element(y)));
}

void KLBasis::for_each_h_row(int y, int max_len_x, const std::function<void(int, const Terms&)>& f) const {
  const Ball& B = *ball_;
  if (max_len_x + B.length(y) > B.radius()) throw BallOverflow("h-constant row exceeds the ball radius");
  int end = 0;
  while (end < size() && B.length(end) <= max_len_x) ++end;
  std::vector<Terms> H(static_cast<std::size_t>(end));
  for (int x = 0; x < end; ++x) {
    Terms& hx = H[static_cast<std::size_t>(x)];
    if (B.length(x) == 0) {
      hx = {{B.left_omega(B.omega_part(x), y), LaurentZ(1)}};
    } else {
      int s = 0;
      while (!left_descent(s, x)) ++s;
      int xp = B.left_gen(s, x);
      const auto& mu = mu_left(s, xp);
      if (!mu) throw BallOverflow("W-graph data missing inside the ball");
      if (mu->empty()) {
        hx = c_left_gen(s, H[static_cast<std::size_t>(xp)]);
      } else {
        Accumulator acc(size());
        acc.add_terms(c_left_gen(s, H[static_cast<std::size_t>(xp)]), LaurentZ(1));
        for (const auto& [z, m] : *mu) acc.add_terms(H[static_cast<std::size_t>(z)], -m);
        hx = acc.take();
      }
    }
    f(x, hx);
  }
}

std::optional<std::pair<int, std::int64_t>> KLBasis::delta_and_sign(int z) const {
  LaurentZ p1 = p(ball_->identity(), z);
  if (p1.is_zero()) return std::nullopt;
  return std::make_pair(-p1.degree(), p1.leading_coeff());
}

std::string cache_key(const Ball& ball) {
  const auto& P = ball.presentation();
  std::string key = P.tag().name() + "-r" + std::to_string(ball.radius()) + "-w";
  for (int s = 0; s < P.generator_count(); ++s) key += (s ? "," : "") + std::to_string(P.weight(s));
  return key;
}

std::string KLBasis::serialize() const {
  std::ostringstream os;
  os << "# hx p-polynomials " << cache_key(*ball_) << " elements=" << size() << "\n";
  for (int w = 0; w < size(); ++w)
    for (const auto& [y, py] : c(w)) os << ball_->label(w) << " " << ball_->label(y) << " " << py.to_string() << "\n";
  return os.str();
}

std::shared_ptr<KLBasis> KLBasis::deserialize(std::shared_ptr<const Ball> ball, const std::string& text) {
  std::shared_ptr<KLBasis> kl(new KLBasis(std::move(ball), NoCompute{}));
  const Ball& B = *kl->ball_;
  std::unordered_map<std::string, int> by_label;
  for (int i = 0; i < B.size(); ++i) by_label[B.label(i)] = i;
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("empty p-polynomial cache");
  std::string expected = "# hx p-polynomials " + cache_key(B) + " elements=" + std::to_string(B.size());
  if (line != expected) throw std::runtime_error("p-polynomial cache header mismatch: " + line);
  kl->c_.assign(static_cast<std::size_t>(B.size()), {});
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto a = line.find(' ');
    auto b = a == std::string::npos ? a : line.find(' ', a + 1);
    if (b == std::string::npos) throw std::runtime_error("malformed p-polynomial line: " + line);
    auto w = by_label.find(line.substr(0, a));
    auto y = by_label.find(line.substr(a + 1, b - a - 1));
    if (w == by_label.end() || y == by_label.end()) throw std::runtime_error("unknown element in cache line: " + line);
    kl->c_[static_cast<std::size_t>(w->second)].emplace_back(y->second, parse_laurent_z(line.substr(b + 1)));
  }
  for (auto& t : kl->c_) std::sort(t.begin(), t.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  kl->build_wgraph();
  return kl;
}

// ---------------------------------------------------------------- a-function

AFunction compute_a_function(const KLBasis& kl, int margin) {
  const Ball& B = kl.ball();
  const int n = kl.size();
  const int R = B.radius();
  if (margin < 0) throw std::invalid_argument("margin must be non-negative");
  AFunction a;
  a.radius = R;
  a.margin = margin;
  a.bound = kl.presentation().positive_root_count();
  const int width = R + 1;
  std::vector<int> maxdeg(static_cast<std::size_t>(n * width), INT_MIN);
  for (int y = 0; y < n; ++y) {
    const int ly = B.length(y);
    kl.for_each_h_row(y, R - ly, [&](int x, const Terms& h) {
      const int L = B.length(x) + ly;
      for (const auto& [z, c] : h) {
        int& slot = maxdeg[static_cast<std::size_t>(z * width + L)];
        slot = std::max(slot, c.degree());
      }
    });
  }
  a.value.assign(static_cast<std::size_t>(n), INT_MIN);
  a.certified.assign(static_cast<std::size_t>(n), 0);
  a.trajectory.assign(static_cast<std::size_t>(n), {});
  for (int z = 0; z < n; ++z) {
    int running = INT_MIN;
    auto& traj = a.trajectory[static_cast<std::size_t>(z)];
    for (int L = 0; L <= R; ++L) {
      running = std::max(running, maxdeg[static_cast<std::size_t>(z * width + L)]);
      if (L >= R - margin) traj.push_back(running);
    }
    a.value[static_cast<std::size_t>(z)] = running;
    bool stable = std::all_of(traj.begin(), traj.end(), [&](int t) { return t == running; });
    a.certified[static_cast<std::size_t>(z)] =
        B.length(z) <= R - 2 * margin && stable && running >= 0 && running <= a.bound;
  }
  return a;
}

// ---------------------------------------------------------------- HTable

HTable::HTable(const KLBasis& kl, int max_total) : kl_(&kl), max_total_(max_total), n_(kl.size()) {
  const Ball& B = kl.ball();
  if (max_total > B.radius()) throw BallOverflow("h-constant table exceeds the ball radius");
  row_of_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
  for (int y = 0; y < n_; ++y) {
    if (B.length(y) > max_total) break;
    kl.for_each_h_row(y, max_total - B.length(y), [&](int x, const Terms& h) {
      row_of_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)] =
          static_cast<int>(rows_.size());
      rows_.push_back(h);
    });
  }
}

bool HTable::has(int x, int y) const {
  return row_of_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)] >= 0;
}

const Terms& HTable::row(int x, int y) const {
  int r = row_of_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
  if (r < 0) throw std::out_of_range("h-constants for this pair were not computed");
  return rows_[static_cast<std::size_t>(r)];
}

LaurentZ HTable::h(int x, int y, int z) const {
  return HeckeElement{Basis::C, row(x, y)}.coeff(z);
}

std::string HTable::serialize() const {
  const Ball& B = kl_->ball();
  std::ostringstream os;
  os << "# hx h-constants " << cache_key(B) << " max_total=" << max_total_ << "\n";
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      if (!has(x, y)) continue;
      for (const auto& [z, c] : row(x, y)) os << B.label(x) << " " << B.label(y) << " " << B.label(z) << " " << c.to_string() << "\n";
    }
  return os.str();
}

HTable::HTable(const KLBasis& kl, int max_total, bool) : kl_(&kl), max_total_(max_total), n_(kl.size()) {}

HTable HTable::deserialize(const KLBasis& kl, const std::string& text) {
  const Ball& B = kl.ball();
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("empty h-constant cache");
  const std::string prefix = "# hx h-constants " + cache_key(B) + " max_total=";
  if (line.rfind(prefix, 0) != 0) throw std::runtime_error("h-constant cache header mismatch: " + line);
  int M = 0;
  try {
    M = std::stoi(line.substr(prefix.size()));
  } catch (const std::exception&) {
    throw std::runtime_error("h-constant cache header mismatch: " + line);
  }
  if (M < 0 || M > B.radius()) throw std::runtime_error("h-constant cache header mismatch: " + line);
  HTable t(kl, M, true);
  const auto n = static_cast<std::size_t>(t.n_);
  t.row_of_.assign(n * n, -1);
  for (int y = 0; y < t.n_; ++y)
    for (int x = 0; x < t.n_; ++x)
      if (B.length(x) + B.length(y) <= M) {
        t.row_of_[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] = static_cast<int>(t.rows_.size());
        t.rows_.emplace_back();
      }
  std::unordered_map<std::string, int> by_label;
  for (int i = 0; i < B.size(); ++i) by_label[B.label(i)] = i;
  auto lookup = [&](const std::string& s) {
    auto it = by_label.find(s);
    if (it == by_label.end()) throw std::runtime_error("unknown element in cache: " + s);
    return it->second;
  };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::size_t a = line.find(' ');
    std::size_t b = a == std::string::npos ? a : line.find(' ', a + 1);
    std::size_t c = b == std::string::npos ? b : line.find(' ', b + 1);
    if (c == std::string::npos) throw std::runtime_error("malformed h-constant line: " + line);
    int x = lookup(line.substr(0, a)), y = lookup(line.substr(a + 1, b - a - 1)), z = lookup(line.substr(b + 1, c - b - 1));
    int r = t.row_of_[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)];
    if (r < 0) throw std::runtime_error("h-constant line outside the table: " + line);
    t.rows_[static_cast<std::size_t>(r)].emplace_back(z, parse_laurent_z(line.substr(c + 1)));
  }
  for (auto& row : t.rows_) {
    if (row.empty()) throw std::runtime_error("h-constant cache is missing rows");
    std::sort(row.begin(), row.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  }
  return t;
}

std::optional<std::int64_t> Gamma::operator()(int x, int y, int z) const {
  const Ball& B = table.kl().ball();
  int zi = B.inverse(z);
  if (!a.is_certified(zi) || !table.has(x, y)) return std::nullopt;
  return table.h(x, y, zi).coeff(a.value[static_cast<std::size_t>(zi)]);
}

}  // namespace hx
