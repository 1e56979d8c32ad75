#pragma once

// Extended affine Weyl groups W = X ⋊ W_f = W' ⋊ Ω for a closed catalog of
// root data, plus the finite Weyl groups of types A and B2.
//
// An element t_λ·w acts on X ⊗ R by p ↦ w(p) + λ.  Elements are kept in this
// translation / finite-part normal form; words are recomputed on demand.

#include "hx/intmat.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hx {

enum class Family {
  InfiniteDihedral,      // affine A1, the Iwahori-Weyl group of SL(2)
  ExtendedAffineA,       // GL(n): Z^n ⋊ S_n, Ω ≅ Z
  ExtendedAffineAPrime,  // PGL(n): Ω ≅ Z/n
  ExtendedAffineB2,      // SO(5): Ω ≅ Z/2
  FiniteA,               // W(A_n) = S_{n+1}
  FiniteB2,
};

struct FamilyTag {
  Family family = Family::InfiniteDihedral;
  int n = 0;  // size parameter where the family has one

  std::string name() const;
  static FamilyTag parse(const std::string& s);
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

struct Element {
  IntVector translation;
  int fin = 0;  // index into Presentation::finite_matrices()

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    std::size_t h = std::hash<int>{}(e.fin);
    for (auto x : e.translation) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct ReducedWord {
  std::vector<int> generators;  // indices into Presentation::generators()
  int omega = 0;                // index into Presentation::omega() (or power of the Ω generator for GL)
};

class Presentation {
 public:
  // weights: one non-negative integer per generator; empty means L = ℓ.
  static std::shared_ptr<const Presentation> make(FamilyTag tag, std::vector<int> weights = {});

  const FamilyTag& tag() const { return tag_; }
  bool affine() const { return affine_; }
  int lattice_rank() const { return rank_; }

  const std::vector<IntMatrix>& finite_matrices() const { return fin_; }
  int finite_order() const { return static_cast<int>(fin_.size()); }
  int finite_mul(int a, int b) const { return fin_mul_[static_cast<std::size_t>(a) * fin_.size() + static_cast<std::size_t>(b)]; }
  int finite_inverse(int a) const { return fin_inv_[static_cast<std::size_t>(a)]; }

  // Positive roots as covectors on X; count is the bound N for the a-function.
  const std::vector<IntVector>& positive_roots() const { return pos_roots_; }
  int positive_root_count() const { return static_cast<int>(pos_roots_.size()); }
  const std::vector<IntVector>& simple_coroots() const { return simple_coroots_; }

  // Generators s_0 (affine only), s_1, ..., s_r.
  const std::vector<Element>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  const std::string& generator_name(int s) const { return gen_names_[static_cast<std::size_t>(s)]; }
  int coxeter_entry(int s, int t) const { return coxeter_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; }  // 0 = infinity
  int weight(int s) const { return weights_[static_cast<std::size_t>(s)]; }
  bool equal_parameters() const;

  // Length-zero subgroup.  For GL(n) it is infinite cyclic: omega() holds only
  // its generator and omega_finite() is false.
  bool omega_finite() const { return omega_finite_; }
  const std::vector<Element>& omega() const { return omega_; }
  // Index (or, for GL, power of the generator) of the Ω-part of x.
  int omega_part(const Element& x) const;
  // ω s ω^-1 = s' as a permutation of generator indices, for each finite Ω element.
  const std::vector<std::vector<int>>& omega_conjugation() const { return omega_perm_; }

  Element identity() const;
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  Element omega_power(int k) const;  // GL only
  int length(const Element& x) const;
  int weighted_length(const Element& x) const;  // L(x), L extended by L(wω) = L(w)
  ReducedWord reduced_word(const Element& x) const;
  Element from_word(const std::vector<int>& gens, int omega = 0) const;
  bool in_affine_subgroup(const Element& x) const;

  // "s1.s0.s2", "e" for the empty word
  std::string word_string(const std::vector<int>& gens) const;
  std::string finite_name(int fin) const;

  // Length via left-multiplication BFS over generators, for validating length().
  // Returns the distance of every element reached within `radius`.
  std::unordered_map<Element, int, ElementHash> bfs_lengths(int radius) const;

 private:
  Presentation() = default;
  void build(FamilyTag tag, std::vector<int> weights);
  void build_finite_group(const std::vector<IntMatrix>& simple);
  void build_omega();
  std::vector<std::int64_t> omega_label(const IntVector& translation) const;

  FamilyTag tag_;
  bool affine_ = true;
  int rank_ = 0;
  std::vector<IntMatrix> fin_;
  std::vector<int> fin_mul_;
  std::vector<int> fin_inv_;
  std::vector<IntVector> pos_roots_;
  std::vector<IntVector> simple_roots_;
  std::vector<IntVector> simple_coroots_;
  // pos_image_positive_[w][k]: is w^-1 applied to positive root k again positive
  std::vector<std::vector<char>> inv_keeps_positive_;
  std::vector<Element> gens_;
  std::vector<std::string> gen_names_;
  std::vector<std::vector<int>> coxeter_;
  std::vector<int> weights_;
  bool omega_finite_ = true;
  std::vector<Element> omega_;
  std::vector<std::vector<int>> omega_perm_;
  SmithForm coroot_snf_;
  std::vector<std::vector<std::int64_t>> omega_labels_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

// All elements of length ≤ radius, sorted by (length, element), with cached
// multiplication by generators and Ω.
class Ball {
 public:
  Ball(PresentationPtr pres, int radius);

  const Presentation& presentation() const { return *pres_; }
  const PresentationPtr& presentation_ptr() const { return pres_; }
  int radius() const { return radius_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const Element& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  const std::vector<Element>& elements() const { return elems_; }
  std::optional<int> find(const Element& x) const;
  int index_of(const Element& x) const;  // throws std::out_of_range if outside

  int length(int i) const { return len_[static_cast<std::size_t>(i)]; }
  int inverse(int i) const { return inv_[static_cast<std::size_t>(i)]; }
  int omega_part(int i) const { return omega_of_[static_cast<std::size_t>(i)]; }
  int identity() const { return identity_; }
  // s·x and x·s; -1 when the product leaves the ball.
  int left_gen(int s, int i) const { return left_gen_[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)]; }
  int right_gen(int s, int i) const { return right_gen_[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)]; }
  int left_omega(int w, int i) const { return left_omega_[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)]; }
  int right_omega(int w, int i) const { return right_omega_[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)]; }
  int omega_count() const { return static_cast<int>(pres_->omega().size()); }
  int omega_index(int w) const { return omega_idx_[static_cast<std::size_t>(w)]; }  // ball index of Ω element w
  int product(int i, int j) const;  // -1 when outside

  // Indices with length exactly k.
  std::vector<int> shell(int k) const;

  std::string label(int i) const;  // reduced word plus Ω part, e.g. "s1.s0*w1"
  // "word=s1.s2.s0 omega=w1 len=3 trans=(1,-1) fin=s1.s2"
  std::string dump_line(int i) const;
  std::string dump() const;

 private:
  PresentationPtr pres_;
  int radius_;
  std::vector<Element> elems_;
  std::unordered_map<Element, int, ElementHash> index_;
  std::vector<int> len_, inv_, omega_of_, omega_idx_;
  int identity_ = 0;
  std::vector<std::vector<int>> left_gen_, right_gen_, left_omega_, right_omega_;
};

}  // namespace hx
