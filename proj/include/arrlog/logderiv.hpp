#pragma once

#include <optional>

#include "arrlog/arrangement.hpp"

namespace arrlog {

/// theta = sum_i components[i] * d/dx_i with homogeneous components of one
/// common degree (zero components allowed, not all zero).
struct Derivation {
  unsigned degree = 0;
  std::vector<Poly> components;
};

Derivation euler_derivation(size_t k);

/// theta applied to a polynomial: sum_i P_i * df/dx_i.
Poly apply_derivation(const Derivation& theta, const Poly& f);
/// theta applied to a linear form: sum_i coeffs_i * P_i.
Poly apply_to_form(const Derivation& theta, const Vec& coeffs);

Derivation add(const Derivation& a, const Derivation& b);
Derivation scale(const Derivation& a, const Rational& c);
/// x_j * theta, one degree higher.
Derivation shift(const Derivation& theta, size_t var);

/// Flat coefficient vector: component index major, monomials of the
/// derivation degree in canonical order minor.
Vec derivation_coefficients(const Derivation& theta);
Derivation derivation_from_coefficients(size_t k, unsigned degree, const Vec& coeffs);

struct DerivationSpace {
  unsigned degree = 0;
  std::vector<Derivation> basis;
  size_t dim() const { return basis.size(); }
};

/// Degree-d graded piece of the logarithmic derivation module, computed
/// as the exact nullspace of the per-form divisibility constraints.
DerivationSpace derivation_space(const Arrangement& a, unsigned degree);

bool is_logarithmic(const Derivation& theta, const Arrangement& a);

struct QuadraticSearch {
  std::optional<Derivation> derivation;  // a quadratic derivation outside T, if any
  size_t dim_d1 = 0;
  size_t dim_d2 = 0;
  size_t dim_t = 0;
};

/// Looks for a quadratic logarithmic derivation that is not a linear-form
/// combination of degree-1 ones: compares D_2 against
/// T = span{x_j * theta : theta in D_1}. Requires essential.
QuadraticSearch minimal_quadratic(const Arrangement& a);

struct Syzygy {
  std::vector<Poly> components;  // sum components[i] * dF/dx_i = 0
  Poly scale;                    // p = theta(F) / F
};

/// n*theta - p*theta_E, the syzygy on the Jacobian generators attached to
/// a logarithmic derivation that is not a multiple of theta_E.
Syzygy derivation_to_syzygy(const Derivation& theta, const Arrangement& a);

}  // namespace arrlog
