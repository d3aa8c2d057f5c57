#pragma once

#include "arrlog/logderiv.hpp"

namespace arrlog {

/// Coefficients of the linear factors of a quadratic derivation with
/// Q_i = x_i * L_i: entry(u, i) is the coefficient of x_u in L_i.
/// Storage is 0-based; the paper-style name b_{u,i} is 1-based.
struct BMatrix {
  Matrix b;  // k x k
  size_t k() const { return b.rows(); }
  const Rational& entry(size_t u, size_t i) const { return b.at(u, i); }
};

/// Factors Q_i = x_i * L_i out of a quadratic derivation in the normalized
/// frame (first k forms are the coordinate hyperplanes). Rejects
/// derivations whose components share a non-constant divisor.
BMatrix extract_b(const Derivation& theta, const Arrangement& normalized);

/// The ideal I_{u,v}: one linear generator plus one quadratic generator per
/// remaining variable, k-1 generators total. Zero generators are kept so
/// degeneracy stays observable.
struct IdealUV {
  size_t u = 0, v = 0;  // 0-based, u < v
  Poly linear_gen;
  std::vector<Poly> quadratic_gens;
  bool is_zero() const;
  std::vector<Poly> generators() const;
};

IdealUV build_ideal_uv(const BMatrix& b, size_t u, size_t v);

struct MembershipEntry {
  size_t point;  // index of the dual point / form
  size_t u = 0, v = 0;
  Vec values;  // generator values at the point
  bool pass = false;
};

struct MembershipReport {
  std::vector<MembershipEntry> entries;
  std::vector<bool> point_on_some_ideal;  // weaker union-variety statement, per point
  bool overall_pass = true;
  bool corollary_pass = true;
};

/// Evaluates every applicable I_{u,v} at every dual point: pairs u < v with
/// both coordinates nonzero must vanish exactly; additionally each point
/// must lie on the variety of at least one ideal.
MembershipReport check_membership(const Arrangement& normalized, const BMatrix& b);

/// The specialization to three variables: the six difference scalars and
/// the ideals I_xy, I_xz, I_yz.
struct PlaneIdealTriple {
  Rational a1, b1, a2, c2, b3, c3;
  IdealUV ixy, ixz, iyz;
  bool any_zero() const { return ixy.is_zero() || ixz.is_zero() || iyz.is_zero(); }
};

PlaneIdealTriple plane_triple(const BMatrix& b);

}  // namespace arrlog
