#pragma once

// Extended quotients of complex tori X = L ⊗ C^× by finite groups of lattice
// automorphisms: classes, fixed loci via Smith form, centralizer orbits.

#include "hx/coxeter.hpp"
#include "hx/intmat.hpp"
#include "hx/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hx {

// exp(2πi·exponent/order), reduced, 0 ≤ exponent < order
struct RootOfUnity {
  std::int64_t order = 1;
  std::int64_t exponent = 0;
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

using TorsionPoint = std::vector<RootOfUnity>;
std::string to_string(const TorsionPoint& p);  // d(1,-1), d(e(1/3),e(2/3))

struct Descriptor {
  enum class Kind { Point, LineModInversion, FreeLine, SymProduct, TorusModGroup };
  Kind kind = Kind::Point;
  std::vector<int> parts;  // SymProduct(n1,...,np), descending
  int torus_dim = 0;       // TorusModGroup
  std::string group;       // TorusModGroup

  static Descriptor point() { return {}; }
  static Descriptor line_mod_inversion() { return {Kind::LineModInversion, {}, 0, {}}; }
  static Descriptor free_line() { return {Kind::FreeLine, {}, 0, {}}; }
  static Descriptor sym_product(std::vector<int> parts);
  static Descriptor torus_mod_group(int dim, std::string group) { return {Kind::TorusModGroup, {}, dim, std::move(group)}; }

  int dimension() const;
  std::string to_string() const;  // "Point", "L", "C*", "Sym(2,1)", "T(2)/W(B2)"
  friend auto operator<=>(const Descriptor&, const Descriptor&) = default;
  friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

// "S3", "S2xS2"; "1" when all blocks are singletons
std::string symmetric_label(std::vector<int> blocks);

class TorusAction {
 public:
  // Group given by unimodular ambient matrices; with det_one the torus is the
  // kernel of the product character, i.e. the sublattice {Σλ_i = 0}.
  static TorusAction from_matrices(std::string group_label, std::vector<IntMatrix> ambient,
                                   std::vector<std::string> names = {}, bool det_one = false);
  static TorusAction inversion();                           // Z/2 on C^×
  static TorusAction symmetric(int n, bool det_one = false);  // S_n permuting coordinates
  // W_f acting on the dual torus X ⊗ C^× of an affine presentation
  static TorusAction dual_torus(const Presentation& p);

  const std::string& group_label() const { return label_; }
  int order() const { return static_cast<int>(elems_.size()); }
  int rank() const { return rank_; }
  int ambient_rank() const { return ambient_rank_; }
  bool det_one() const { return det_one_; }
  bool permutation_action() const { return perm_; }
  const IntMatrix& matrix(int g) const { return elems_[static_cast<std::size_t>(g)]; }        // on the lattice
  const IntMatrix& ambient(int g) const { return ambient_[static_cast<std::size_t>(g)]; }
  const std::string& name(int g) const { return names_[static_cast<std::size_t>(g)]; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * order() + b)]; }
  int inverse(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int identity() const { return id_; }

  // lattice coordinates θ (mod 1) to ambient root-of-unity coordinates
  TorsionPoint ambient_point(const std::vector<Rational>& theta) const;

 private:
  std::string label_;
  int rank_ = 0, ambient_rank_ = 0;
  bool det_one_ = false, perm_ = false;
  std::vector<IntMatrix> elems_, ambient_;
  std::vector<std::string> names_;
  std::vector<int> mul_, inv_;
  int id_ = 0;
};

struct ConjugacyClass {
  int representative = 0;
  std::vector<int> members;
  std::vector<int> centralizer;
  std::string tag;
};

std::vector<ConjugacyClass> conjugacy_classes(const TorusAction& a);

struct FixedLocus {
  int element = 0;
  int dim = 0;
  IntVector component_group;  // invariant factors > 1
  std::int64_t component_count = 1;
  IntMatrix sublattice;       // rank × dim basis of the identity component's cocharacters
  std::vector<std::vector<Rational>> representatives;  // one torsion point per component, lattice coords mod 1
  std::vector<TorsionPoint> points;                    // the same, in ambient coordinates

  // index of the component containing the fixed point θ
  int component_of(const std::vector<Rational>& theta) const;

  IntMatrix smith_V;
  IntVector diag;  // Smith diagonal of M - I (length rank)
};

FixedLocus fixed_locus(const TorusAction& a, int g);

struct ExtQuotComponent {
  std::string class_tag;
  int representative = 0;
  int dim = 0;
  Descriptor descriptor;
  std::vector<TorsionPoint> orbit;  // representatives of the X^γ components in this Z(γ)-orbit
};

std::vector<ExtQuotComponent> extended_quotient(const TorusAction& a);

// Z(γ)-orbits on the finite fixed set X^γ; throws std::invalid_argument when X^γ is not finite.
std::vector<std::vector<TorsionPoint>> torsion_orbit_census(const TorusAction& a, int g);

struct CensusRecord {
  std::string class_tag;
  int dim = 0;
  Descriptor descriptor;
  int multiplicity = 0;
};

// grouped by (class, descriptor), in class order
std::vector<CensusRecord> census(const std::vector<ExtQuotComponent>& comps);
// descriptor -> count over all classes
std::map<Descriptor, int> descriptor_multiset(const std::vector<ExtQuotComponent>& comps);

// p(n)
std::int64_t partition_count(int n);

}  // namespace hx
