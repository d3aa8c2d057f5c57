#pragma once

#include <string>
#include <vector>

#include "arrlog/matrix.hpp"
#include "arrlog/poly.hpp"

namespace arrlog {

/// Scales so the first nonzero coordinate is 1. Throws on the zero vector.
Vec normalize_projective(const Vec& v);

bool proportional(const Vec& a, const Vec& b);

/// Central arrangement: n pairwise non-proportional linear forms in k
/// variables. Forms are kept as given; comparisons are projective.
class Arrangement {
 public:
  Arrangement(size_t k, std::vector<Vec> forms, std::vector<std::string> var_names = {});

  /// Text format: "vars: x,y,z" then one form per line, '#' comments.
  static Arrangement parse_text(const std::string& text);
  /// {"vars": [...], "forms": [[...], ...]} with integer or string entries.
  static Arrangement parse_json(const std::string& text);
  /// Dispatches on the first non-space character.
  static Arrangement parse(const std::string& text);

  size_t k() const { return k_; }
  size_t n() const { return forms_.size(); }
  const std::vector<Vec>& forms() const { return forms_; }
  const Vec& form(size_t i) const { return forms_[i]; }
  const std::vector<std::string>& var_names() const { return names_; }

  size_t rank() const;
  bool is_essential() const { return rank() == k_; }

  /// F = product of the forms, homogeneous of degree n.
  Poly defining_polynomial() const;
  /// The k partial derivatives of F.
  std::vector<Poly> jacobian_generators() const;
  /// One projectively normalized point per form, order preserved.
  std::vector<Vec> dual_points() const;

  Poly form_poly(size_t i) const { return Poly::linear_form(forms_[i]); }

  /// New arrangement with every form replaced by form * t.
  Arrangement transformed(const Matrix& t) const;
  Arrangement subarrangement(const std::vector<size_t>& indices) const;

 private:
  size_t k_;
  std::vector<Vec> forms_;
  std::vector<std::string> names_;
};

struct CoordinateFrame {
  Arrangement arrangement;       // first k forms are x_1, ..., x_k exactly
  Matrix transform;              // original form (permuted) * transform = new form
  std::vector<size_t> permutation;  // new position -> original index
};

/// Moves a greedily chosen independent k-subset of forms to the front and
/// changes coordinates so they become x_1, ..., x_k. Requires essential.
CoordinateFrame normalize_coordinates(const Arrangement& a);

std::string arrangement_to_text(const Arrangement& a);

}  // namespace arrlog
