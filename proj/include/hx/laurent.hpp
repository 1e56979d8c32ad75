#pragma once

// Laurent polynomials in one variable with exact coefficients.
//
// Storage is dense from the lowest nonzero exponent to the highest one; both
// end coefficients are nonzero, so two equal polynomials always have identical
// storage.  The zero polynomial has empty storage.

#include "hx/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hx {

template <class C>
class Laurent {
 public:
  using coeff_type = C;

  Laurent() = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  Laurent(C constant) {
    if (constant != C(0)) coef_.push_back(std::move(constant));
  }

  static Laurent monomial(C c, int exponent) {
    Laurent p;
    if (c != C(0)) {
      p.low_ = exponent;
      p.coef_.push_back(std::move(c));
    }
    return p;
  }
  static Laurent var(int exponent = 1) { return monomial(C(1), exponent); }

  // Builds from (exponent, coefficient) pairs; repeated exponents accumulate.
  static Laurent from_terms(const std::vector<std::pair<int, C>>& terms) {
    Laurent p;
    for (const auto& [e, c] : terms) p += monomial(c, e);
    return p;
  }

  bool is_zero() const { return coef_.empty(); }
  int valuation() const { require_nonzero(); return low_; }
  int degree() const { require_nonzero(); return low_ + static_cast<int>(coef_.size()) - 1; }
  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(coef_.begin(), coef_.end(), [](const C& c) { return c != C(0); }));
  }

  C coeff(int e) const {
    if (coef_.empty() || e < low_ || e > degree()) return C(0);
    return coef_[static_cast<std::size_t>(e - low_)];
  }
  C leading_coeff() const { require_nonzero(); return coef_.back(); }

  // Visits nonzero terms in ascending exponent order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < coef_.size(); ++i)
      if (coef_[i] != C(0)) f(low_ + static_cast<int>(i), coef_[i]);
  }

  std::vector<std::pair<int, C>> terms() const {
    std::vector<std::pair<int, C>> out;
    for_each([&](int e, const C& c) { out.emplace_back(e, c); });
    return out;
  }

  // v^n -> v^-n
  Laurent bar() const {
    Laurent p;
    if (is_zero()) return p;
    p.low_ = -degree();
    p.coef_.assign(coef_.rbegin(), coef_.rend());
    return p;
  }

  bool is_balanced() const { return *this == bar(); }
  bool is_antibalanced() const { return *this == -bar(); }

  // Part with exponents in [lo, hi].
  Laurent slice(int lo, int hi) const {
    Laurent p;
    for_each([&](int e, const C& c) {
      if (e >= lo && e <= hi) p += monomial(c, e);
    });
    return p;
  }

  Laurent operator-() const {
    Laurent p = *this;
    for (auto& c : p.coef_) c = -c;
    return p;
  }

  Laurent& operator+=(const Laurent& o) { axpy(C(1), o, 0); return *this; }
  Laurent& operator-=(const Laurent& o) { axpy(C(-1), o, 0); return *this; }

  // this += a * v^shift * o
  void axpy(const C& a, const Laurent& o, int shift) {
    if (o.is_zero() || a == C(0)) return;
    int olow = o.low_ + shift;
    int ohigh = olow + static_cast<int>(o.coef_.size()) - 1;
    if (is_zero()) {
      low_ = olow;
      coef_.assign(o.coef_.size(), C(0));
    } else {
      int high = degree();
      int nlow = std::min(low_, olow);
      int nhigh = std::max(high, ohigh);
      if (nlow < low_ || nhigh > high) {
        std::vector<C> grown(static_cast<std::size_t>(nhigh - nlow + 1), C(0));
        std::move(coef_.begin(), coef_.end(), grown.begin() + (low_ - nlow));
        coef_ = std::move(grown);
        low_ = nlow;
      }
    }
    for (std::size_t i = 0; i < o.coef_.size(); ++i) {
      auto& slot = coef_[static_cast<std::size_t>(olow - low_) + i];
      slot = coeff_add(slot, coeff_mul(a, o.coef_[i]));
    }
    trim();
  }

  Laurent& operator*=(const C& s) {
    if (s == C(0)) { coef_.clear(); low_ = 0; return *this; }
    for (auto& c : coef_) c = coeff_mul(c, s);
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
  friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
  friend Laurent operator*(Laurent a, const C& s) { a *= s; return a; }
  friend Laurent operator*(const C& s, Laurent a) { a *= s; return a; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent p;
    if (a.is_zero() || b.is_zero()) return p;
    p.low_ = a.low_ + b.low_;
    p.coef_.assign(a.coef_.size() + b.coef_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i) {
      if (a.coef_[i] == C(0)) continue;
      for (std::size_t j = 0; j < b.coef_.size(); ++j)
        p.coef_[i + j] = coeff_add(p.coef_[i + j], coeff_mul(a.coef_[i], b.coef_[j]));
    }
    p.trim();
    return p;
  }
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

  // Multiplication by v^k.
  Laurent shifted(int k) const {
    Laurent p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
  }

  template <class X>
  X evaluate(const X& x) const {
    X acc(0);
    if (is_zero()) return acc;
    // Horner from the top, then rescale by x^low.
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + X(*it);
    X scale(1);
    if (low_ >= 0) {
      for (int i = 0; i < low_; ++i) scale = scale * x;
      return acc * scale;
    }
    for (int i = 0; i < -low_; ++i) scale = scale * x;
    return acc / scale;
  }

  template <class D>
  Laurent<D> cast() const {
    Laurent<D> p;
    for_each([&](int e, const C& c) { p += Laurent<D>::monomial(D(c), e); });
    return p;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.low_ == b.low_ && a.coef_ == b.coef_; }

  // Total order used for deterministic containers: by storage.
  friend bool operator<(const Laurent& a, const Laurent& b) {
    if (a.low_ != b.low_) return a.low_ < b.low_;
    if (a.coef_.size() != b.coef_.size()) return a.coef_.size() < b.coef_.size();
    return std::lexicographical_compare(a.coef_.begin(), a.coef_.end(), b.coef_.begin(), b.coef_.end());
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(low_);
    for (const auto& c : coef_) {
      std::size_t hc;
      if constexpr (std::is_integral_v<C>) hc = std::hash<C>{}(c);
      else hc = std::hash<std::string>{}(hx::to_string(Rational(c)));
      h ^= hc + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::string to_string(std::string_view var = "v") const;

 private:
  void require_nonzero() const {
    if (coef_.empty()) throw std::domain_error("degree/valuation of the zero Laurent polynomial");
  }
  void trim() {
    std::size_t first = 0;
    while (first < coef_.size() && coef_[first] == C(0)) ++first;
    if (first == coef_.size()) { coef_.clear(); low_ = 0; return; }
    std::size_t last = coef_.size();
    while (coef_[last - 1] == C(0)) --last;
    if (first > 0 || last < coef_.size()) {
      coef_ = std::vector<C>(std::make_move_iterator(coef_.begin() + static_cast<std::ptrdiff_t>(first)),
                             std::make_move_iterator(coef_.begin() + static_cast<std::ptrdiff_t>(last)));
      low_ += static_cast<int>(first);
    }
  }

  int low_ = 0;
  std::vector<C> coef_;
};

using LaurentZ = Laurent<std::int64_t>;
using LaurentQ = Laurent<Rational>;

template <class C>
std::ostream& operator<<(std::ostream& os, const Laurent<C>& p) { return os << p.to_string(); }

// Textual form: terms in ascending exponent, e.g. "3*v^-2 + v", "1/2*t - 1/2*t^-1" is
// written "-1/2*t^-1 + 1/2*t".
std::string format_coeff(std::int64_t c);
std::string format_coeff(const Rational& c);

template <class C>
std::string Laurent<C>::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for_each([&](int e, const C& c) {
    bool neg = c < C(0);
    C mag = neg ? C(-c) : c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    bool unit = mag == C(1);
    if (e == 0) {
      out += format_coeff(mag);
      return;
    }
    if (!unit) out += format_coeff(mag) + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  });
  return out;
}

// Parses the textual form above.  Accepts any single-letter variable name and
// arbitrary whitespace; coefficient and variable are joined by '*'.
LaurentZ parse_laurent_z(std::string_view text);
LaurentQ parse_laurent_q(std::string_view text);

// Balanced / anti-balanced split: p = balanced + antibalanced with
// bar(balanced) = balanced, bar(antibalanced) = -antibalanced.
struct BalancedPair {
  LaurentQ balanced;
  LaurentQ antibalanced;
};

BalancedPair decompose(const LaurentQ& p);

// For anti-balanced p, the balanced q with q * (t - t^-1) = p.
// Throws std::invalid_argument when p is not anti-balanced and std::logic_error
// if the division leaves a remainder.
LaurentQ divide_by_generator(const LaurentQ& p);

// t - t^-1
LaurentQ antibalanced_generator();

}  // namespace hx

template <class C>
struct std::hash<hx::Laurent<C>> {
  std::size_t operator()(const hx::Laurent<C>& p) const { return p.hash(); }
};
