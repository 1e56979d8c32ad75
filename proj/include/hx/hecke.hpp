#pragma once

// Iwahori-Hecke algebra of an extended affine Weyl group truncated to a
// length ball: T-basis arithmetic, Kazhdan-Lusztig basis, W-graph,
// structure constants h_{x,y,z}, a-function, Δ, 𝒟, γ and cells.

#include "hx/coxeter.hpp"
#include "hx/laurent.hpp"

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hx {

// (ball index, coefficient), sorted by index, no zero coefficients
using Terms = std::vector<std::pair<int, LaurentZ>>;

enum class Basis { T, C };

struct HeckeElement {
  Basis basis = Basis::T;
  Terms terms;

  bool is_zero() const { return terms.empty(); }
  LaurentZ coeff(int i) const;
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;
};

class BallOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense scratch vector over a ball that hands back sorted sparse terms.
class Accumulator {
 public:
  explicit Accumulator(int n) : slot_(static_cast<std::size_t>(n)), mark_(static_cast<std::size_t>(n), 0) {}
  // slot[i] += scale * v^shift * c
  void add(int i, const LaurentZ& c, std::int64_t scale = 1, int shift = 0);
  void add_terms(const Terms& t, const LaurentZ& factor);
  LaurentZ& at(int i);
  const LaurentZ& peek(int i) const { return slot_[static_cast<std::size_t>(i)]; }
  Terms take();

 private:
  std::vector<LaurentZ> slot_;
  std::vector<char> mark_;
  std::vector<int> touched_;
};

class KLBasis {
 public:
  explicit KLBasis(std::shared_ptr<const Ball> ball);

  const Ball& ball() const { return *ball_; }
  const std::shared_ptr<const Ball>& ball_ptr() const { return ball_; }
  const Presentation& presentation() const { return ball_->presentation(); }
  int size() const { return ball_->size(); }

  LaurentZ v_s(int s) const { return LaurentZ::var(presentation().weight(s)); }
  bool unit_weights() const { return unit_weights_; }

  bool left_descent(int s, int w) const;
  bool right_descent(int s, int w) const;

  // c_w = Σ p_{y,w} T_y
  const Terms& c(int w) const { return c_[static_cast<std::size_t>(w)]; }
  LaurentZ p(int y, int w) const;
  HeckeElement T(int w) const { return {Basis::T, {{w, LaurentZ(1)}}}; }
  HeckeElement kl_element(int w) const { return {Basis::T, c(w)}; }

  // T-basis arithmetic.  Throws BallOverflow when the support would leave the ball.
  Terms t_left_gen(int s, const Terms& h) const;   // T_s h
  Terms t_right_gen(int s, const Terms& h) const;  // h T_s
  Terms t_left_omega(int w, const Terms& h) const;
  Terms t_right_omega(int w, const Terms& h) const;
  HeckeElement mul_T(const HeckeElement& a, const HeckeElement& b) const;

  HeckeElement to_c(const HeckeElement& t) const;
  HeckeElement to_T(const HeckeElement& c) const;

  // W-graph: for s·w > w, c_s c_w = c_{sw} + Σ mu_left(s,w) c_z (z < w, sz < z).
  // Empty optional when not available inside the ball.
  const std::optional<Terms>& mu_left(int s, int w) const;
  const std::optional<Terms>& mu_right(int s, int w) const;

  // c-basis multiplication by c_s and by T_ω.
  Terms c_left_gen(int s, const Terms& h) const;
  Terms c_right_gen(int s, const Terms& h) const;
  Terms c_left_omega(int w, const Terms& h) const;
  Terms c_right_omega(int w, const Terms& h) const;

  // c_x c_y in the c-basis, by T-basis expansion and unitriangular solve.
  HeckeElement h_constants(int x, int y) const;

  // For fixed y, calls f(x, c_x c_y) for every x with ℓ(x) ≤ max_len_x, in ball
  // order, computed by the W-graph recursion.  Requires ℓ(x)+ℓ(y) ≤ radius.
  void for_each_h_row(int y, int max_len_x, const std::function<void(int, const Terms&)>& f) const;

  // Top term of p_{1,z}: (Δ(z), n_z); empty when p_{1,z} = 0.
  std::optional<std::pair<int, std::int64_t>> delta_and_sign(int z) const;

  // c_s c_w - c_{sw} re-expanded in the c-basis through the T-basis (any weights).
  Terms mu_by_expansion(int s, int w, bool left) const;

  std::string serialize() const;
  // Text in the serialize() format; throws std::runtime_error when it does not
  // describe this ball.
  static std::shared_ptr<KLBasis> deserialize(std::shared_ptr<const Ball> ball, const std::string& text);

 private:
  struct NoCompute {};
  KLBasis(std::shared_ptr<const Ball> ball, NoCompute);
  void compute();
  void build_wgraph();

  std::shared_ptr<const Ball> ball_;
  bool unit_weights_ = true;
  std::vector<int> omega_inverse_;
  std::vector<ReducedWord> words_;
  std::vector<Terms> c_;
  std::vector<std::vector<std::optional<Terms>>> mu_left_, mu_right_;
};

std::string cache_key(const Ball& ball);

// a-function by streaming all products c_x c_y with ℓ(x)+ℓ(y) ≤ radius.
struct AFunction {
  int radius = 0;
  int margin = 0;
  int bound = 0;  // number of positive roots of W_f
  std::vector<int> value;
  std::vector<char> certified;
  // trajectory[z][k] = truncated value using pairs with ℓ(x)+ℓ(y) ≤ radius-margin+k
  std::vector<std::vector<int>> trajectory;
  bool is_certified(int z) const { return certified[static_cast<std::size_t>(z)] != 0; }
};

AFunction compute_a_function(const KLBasis& kl, int margin);

// All h_{x,y,·} with ℓ(x)+ℓ(y) ≤ max_total.
class HTable {
 public:
  HTable(const KLBasis& kl, int max_total);
  int max_total() const { return max_total_; }
  bool has(int x, int y) const;
  const Terms& row(int x, int y) const;  // throws std::out_of_range when not computed
  LaurentZ h(int x, int y, int z) const;
  std::string serialize() const;
  // Text in the serialize() format; throws std::runtime_error on mismatch.
  static HTable deserialize(const KLBasis& kl, const std::string& text);
  const KLBasis& kl() const { return *kl_; }

 private:
  HTable(const KLBasis& kl, int max_total, bool);
  const KLBasis* kl_;
  int max_total_;
  int n_;
  std::vector<int> row_of_;  // x*n+y -> index into rows_, -1 if absent
  std::vector<Terms> rows_;
};

// γ_{x,y,z}: coefficient of v^{a(z^-1)} in h_{x,y,z^-1}.
struct Gamma {
  const HTable& table;
  const AFunction& a;
  // empty when not computable (pair outside the table or a(z^-1) uncertified)
  std::optional<std::int64_t> operator()(int x, int y, int z) const;
};

struct CellPartition {
  int radius = 0;
  std::vector<int> left_cell, right_cell, two_sided_cell;  // cell id per ball index
  std::vector<std::vector<int>> left_cells, right_cells, two_sided_cells;
  // per two-sided cell: meets the certified region / a-value on certified members (-1 if none)
  std::vector<char> cell_certified;
  std::vector<int> cell_a;
  std::vector<char> cell_a_consistent;
  std::vector<char> boundary;  // element has an edge leaving the ball
  std::vector<std::vector<int>> left_edges, right_edges;  // y -> {x : x ≤ y}
  std::vector<int> distinguished;                          // 𝒟 ∩ certified region
  std::vector<std::int64_t> n_sign;                        // n_d for each entry of distinguished

  std::vector<int> certified_two_sided() const;
  // reachability in the union of left and right edges: z' ≤_LR z
  std::vector<char> below_two_sided(int z) const;
  // n̂_z = n_d with d ∈ 𝒟, d ∼_L z^-1; empty when no such d was found
  std::optional<std::int64_t> n_hat(const Ball& ball, int z) const;
};

CellPartition compute_cells(const KLBasis& kl, const AFunction& a);

struct PropertyResult {
  std::string name;
  bool pass = true;
  long checked = 0;
  std::vector<std::string> witnesses;
};

// P1-P8 over all instances whose ingredients are computable and certified.
std::vector<PropertyResult> check_properties(const KLBasis& kl, const AFunction& a, const HTable& h,
                                             const CellPartition& cells);

}  // namespace hx
