#pragma once

// Langlands-dual bookkeeping: partitions, reductive centralizers of unipotent
// classes, representation-ring descriptors and the matcher against the
// extended quotient of the dual torus.

#include "hx/coxeter.hpp"
#include "hx/extquot.hpp"

#include <string>
#include <vector>

namespace hx {

using Partition = std::vector<int>;  // descending, positive

bool is_partition(const Partition& p);
std::vector<Partition> partitions(int n);  // reverse lexicographic, (n) first
Partition dual_partition(const Partition& p);
std::string to_string(const Partition& p);  // "(3,1)"
// distinct parts with multiplicities, parts descending: (2,2,1) -> {(2,2),(1,1)}
std::vector<std::pair<int, int>> multiplicities(const Partition& p);

enum class GroupKind { SL2, GL, PGL, SO5 };

struct UnipotentClass {
  std::string tag;      // partition, or e / c1 / c2 / c0 for SO(5)
  Partition partition;  // type A only
};

struct DualGroupDatum {
  GroupKind kind = GroupKind::SL2;
  int n = 2;
  std::string group;       // "SL2", "GL3", ...
  std::string dual_group;  // "PGL2", "GL3", "SL3", "Sp4"
  int torus_rank = 1;
  TorusAction action;
  std::vector<UnipotentClass> classes;

  static DualGroupDatum make(GroupKind kind, int n = 0);
  static DualGroupDatum from_tag(const FamilyTag& tag);
};

struct ReductiveDescriptor {
  enum class Kind { GLProduct, GLProductInSL, FiniteCyclic, TwoGroupTimesSL2, TwoGroupSemidirectGm, SpFull, FullDual };
  Kind kind = Kind::GLProduct;
  std::vector<int> blocks;   // n_1, ..., n_p
  std::vector<int> weights;  // μ_1, ..., μ_p (GLProductInSL)
  int order = 0;             // FiniteCyclic
  int rank = 0;              // FullDual
  std::string weyl;          // FullDual, SpFull

  // |π_0|: gcd of the weights for GLProductInSL, 1 for the connected kinds,
  // the order itself for FiniteCyclic
  std::int64_t component_group_order() const;
  std::string to_string() const;
};

// Reductive part of the centralizer of the class dual to the given cell label.
// Throws std::invalid_argument for a class outside the catalog.
ReductiveDescriptor centralizer_reductive(const DualGroupDatum& d, const UnipotentClass& c);

struct RepRing {
  bool disconnected = false;  // components not determined
  std::vector<Descriptor> components;
  std::string note;
};

RepRing rep_ring_descriptor(const ReductiveDescriptor& d);

// ℂ ⊕ (M ⋊ Z/2): the crossed product maps and module census are rechecked
// before reading off Point, Point + Point + LineModInversion.
std::vector<Descriptor> crossed_product_components();

enum class Verdict { Pass, Fail, Discrepancy };
std::string to_string(Verdict v);

struct MatchRecord {
  std::string side;  // "cells" or "extquot"
  std::string tag;
  int dim = 0;
  std::string descriptor;
};

struct MatchReport {
  std::string group;
  Verdict verdict = Verdict::Pass;
  std::vector<MatchRecord> records;
  std::vector<std::string> notes;
  std::map<Descriptor, int> cell_side, extquot_side;
};

// Throws std::invalid_argument for unsupported groups or sizes.
MatchReport match_conjecture(GroupKind kind, int n = 0);

struct BernsteinPoint {
  std::vector<std::string> hecke_factors;  // "H(~A_{e-1}, q^r)"
  std::vector<ExtQuotComponent> components;
};

BernsteinPoint bernstein_point_gl(const std::vector<int>& exponents, const std::vector<int>& torsion);

}  // namespace hx
