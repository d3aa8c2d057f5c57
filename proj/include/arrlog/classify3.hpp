#pragma once

#include "arrlog/logderiv.hpp"

namespace arrlog {

enum class ClassTag {
  Type1,             // xyz(x+y) * prod_j (y + t_j z), t_j != 0
  Type2,             // xyz(x+y+z) * prod_j (y + t_j z), t_j != 0
  Type3,             // xyz(x+y+z)(x+z)(y+z)
  NoQuadratic,       // gates: no minimal quadratic derivation
  HasLinear,         // gates: dim D_1 > 1
  NotRank3,          // gates: not a rank-3 line arrangement
  TheoremViolation,  // gates passed but no canonical fit found; must never happen
};

std::string to_string(ClassTag tag);

struct Classification {
  ClassTag tag = ClassTag::NotRank3;
  std::vector<Rational> t_values;    // read off the accepted fit, canonical list order
  std::vector<Rational> t_canonical; // invariant representative of the t-multiset
  Matrix transform;                  // maps input forms onto the canonical list (when fitted)
  std::vector<size_t> permutation;   // input index -> position in the canonical list
  std::string note;

  bool fitted() const {
    return tag == ClassTag::Type1 || tag == ClassTag::Type2 || tag == ClassTag::Type3;
  }
};

/// Canonical form lists / defining polynomials of the three families.
std::vector<Vec> canonical_forms(ClassTag tag, const std::vector<Rational>& ts);
Poly canonical_polynomial(ClassTag tag, const std::vector<Rational>& ts);

struct MultiplePoint {
  Vec point;  // projectively normalized
  std::vector<size_t> lines;
  size_t multiplicity() const { return lines.size(); }
};

/// All pairwise intersection points of a rank-3 line arrangement, counted
/// with the number of lines through each, in first-discovery order.
std::vector<MultiplePoint> multiple_points(const Arrangement& a);

/// Decides Theorem-2.5 membership by canonical-form fitting. Gate order:
/// NotRank3, HasLinear, NoQuadratic; then the first accepted assignment in
/// a fixed enumeration wins (Type3 profile fit, then Type1, then Type2).
Classification classify(const Arrangement& a);
/// Same, reusing precomputed gate data.
Classification classify(const Arrangement& a, const QuadraticSearch& gates);

/// Invariant representative of a type's t-multiset: the lexicographically
/// smallest sorted read-off over every accepted fit of the canonical
/// instance (for Type1 additionally minimized over the scaling freedom,
/// which pins some element to 1).
std::vector<Rational> canonical_t_multiset(ClassTag tag, const std::vector<Rational>& ts);

}  // namespace arrlog
