#include "arrlog/classify3.hpp"

#include <algorithm>
#include <map>

namespace arrlog {

std::string to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::Type1: return "Type1";
    case ClassTag::Type2: return "Type2";
    case ClassTag::Type3: return "Type3";
    case ClassTag::NoQuadratic: return "NoQuadratic";
    case ClassTag::HasLinear: return "HasLinear";
    case ClassTag::NotRank3: return "NotRank3";
    case ClassTag::TheoremViolation: return "TheoremViolation";
  }
  return "?";
}

std::vector<Vec> canonical_forms(ClassTag tag, const std::vector<Rational>& ts) {
  auto r = [](long a, long b, long c) { return Vec{Rational(a), Rational(b), Rational(c)}; };
  std::vector<Vec> forms{r(1, 0, 0), r(0, 1, 0), r(0, 0, 1)};
  switch (tag) {
    case ClassTag::Type1:
      forms.push_back(r(1, 1, 0));
      break;
    case ClassTag::Type2:
      forms.push_back(r(1, 1, 1));
      break;
    case ClassTag::Type3:
      if (!ts.empty()) throw ValidationError("Type3 takes no parameters");
      forms.push_back(r(1, 1, 1));
      forms.push_back(r(1, 0, 1));
      forms.push_back(r(0, 1, 1));
      return forms;
    default:
      throw ValidationError("no canonical form for gate tags");
  }
  for (const Rational& t : ts) {
    if (t == 0) throw ValidationError("family parameters t_j must be nonzero");
    forms.push_back(Vec{Rational(0), Rational(1), t});
  }
  return forms;
}

Poly canonical_polynomial(ClassTag tag, const std::vector<Rational>& ts) {
  Poly f = Poly::constant(3, Rational(1));
  for (const Vec& form : canonical_forms(tag, ts)) f = f * Poly::linear_form(form);
  return f;
}

std::vector<MultiplePoint> multiple_points(const Arrangement& a) {
  if (a.k() != 3) throw ValidationError("multiple_points needs k = 3");
  if (a.rank() != 3) throw ValidationError("multiple_points needs a rank-3 arrangement");
  std::vector<MultiplePoint> points;
  for (size_t i = 0; i < a.n(); ++i)
    for (size_t j = i + 1; j < a.n(); ++j) {
      const Vec& f = a.form(i);
      const Vec& g = a.form(j);
      Vec p{f[1] * g[2] - f[2] * g[1], f[2] * g[0] - f[0] * g[2], f[0] * g[1] - f[1] * g[0]};
      p = normalize_projective(p);  // forms are non-proportional, so p != 0
      bool seen = false;
      for (const MultiplePoint& q : points)
        if (q.point == p) { seen = true; break; }
      if (seen) continue;
      MultiplePoint mp{p, {}};
      for (size_t l = 0; l < a.n(); ++l) {
        Rational val(0);
        for (size_t c = 0; c < 3; ++c) val += a.form(l)[c] * p[c];
        if (val == 0) mp.lines.push_back(l);
      }
      points.push_back(std::move(mp));
    }
  return points;
}

namespace {

// Transform sending lines (ix, iy, iz) to x, y, z up to scalars and line
// i4 to `fourth` exactly up to one scalar. For fourth = (1,1,0) the z row
// stays free; the convention gamma = 1 pins it.
std::optional<Matrix> fit_four(const Arrangement& a, size_t ix, size_t iy, size_t iz, size_t i4,
                               const Vec& fourth) {
  auto ainv = inverse(Matrix::from_rows({a.form(ix), a.form(iy), a.form(iz)}));
  if (!ainv) return std::nullopt;
  Vec u = row_times_matrix(a.form(i4), *ainv);
  Vec alpha(3);
  for (size_t i = 0; i < 3; ++i) {
    if (fourth[i] == 0) {
      if (u[i] != 0) return std::nullopt;
      alpha[i] = 1;
    } else {
      if (u[i] == 0) return std::nullopt;
      alpha[i] = fourth[i] / u[i];
    }
  }
  Matrix scale(3, 3);
  for (size_t i = 0; i < 3; ++i) scale.at(i, i) = alpha[i];
  return *ainv * scale;
}

struct Fit {
  std::vector<Rational> t_values;
  Matrix transform;
  std::vector<size_t> permutation;
};

// Pencil-anchored fit for Type1/Type2: apex members map to y, z and the
// rest of the pencil must land on y + t z with t != 0.
std::optional<Fit> try_pencil_fit(const Arrangement& a, const std::vector<size_t>& pencil,
                                  size_t rx, size_t r4, size_t py, size_t pz, const Vec& fourth) {
  auto t = fit_four(a, rx, py, pz, r4, fourth);
  if (!t) return std::nullopt;
  Fit fit;
  fit.transform = *t;
  fit.permutation.assign(a.n(), 0);
  fit.permutation[rx] = 0;
  fit.permutation[py] = 1;
  fit.permutation[pz] = 2;
  fit.permutation[r4] = 3;
  size_t next = 4;
  for (size_t m : pencil) {
    if (m == py || m == pz) continue;
    Vec img = row_times_matrix(a.form(m), fit.transform);
    if (img[0] != 0 || img[1] == 0 || img[2] == 0) return std::nullopt;
    fit.t_values.push_back(img[2] / img[1]);
    fit.permutation[m] = next++;
  }
  return fit;
}

// Full-list fit used for Type3 (and Type2 with an empty pencil): the four
// assigned lines go to x, y, z, fourth and every remaining form must match
// the rest of the target list projectively.
std::optional<Fit> try_list_fit(const Arrangement& a, size_t ix, size_t iy, size_t iz, size_t i4,
                                const std::vector<Vec>& targets) {
  auto t = fit_four(a, ix, iy, iz, i4, targets[3]);
  if (!t) return std::nullopt;
  Fit fit;
  fit.transform = *t;
  fit.permutation.assign(a.n(), size_t(-1));
  fit.permutation[ix] = 0;
  fit.permutation[iy] = 1;
  fit.permutation[iz] = 2;
  fit.permutation[i4] = 3;
  std::vector<bool> used(targets.size(), false);
  used[0] = used[1] = used[2] = used[3] = true;
  for (size_t m = 0; m < a.n(); ++m) {
    if (fit.permutation[m] != size_t(-1)) continue;
    Vec img = normalize_projective(row_times_matrix(a.form(m), fit.transform));
    bool matched = false;
    for (size_t c = 4; c < targets.size(); ++c) {
      if (used[c]) continue;
      if (normalize_projective(targets[c]) == img) {
        fit.permutation[m] = c;
        used[c] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return std::nullopt;
  }
  return fit;
}

struct Fitter {
  const Arrangement& a;
  std::vector<MultiplePoint> points;

  explicit Fitter(const Arrangement& arr) : a(arr), points(multiple_points(arr)) {}

  std::vector<size_t> apexes() const {
    std::vector<size_t> out;
    if (a.n() < 5) return out;
    for (size_t i = 0; i < points.size(); ++i)
      if (points[i].multiplicity() == a.n() - 2) out.push_back(i);
    return out;
  }

  bool braid_profile() const {
    if (a.n() != 6) return false;
    std::map<size_t, size_t> counts;
    for (const MultiplePoint& p : points) ++counts[p.multiplicity()];
    return counts == std::map<size_t, size_t>{{2, 3}, {3, 4}};
  }

  // every accepted fit of one family, in deterministic enumeration order
  std::vector<Fit> fits(ClassTag tag, bool first_only) const {
    std::vector<Fit> out;
    const Vec fourth = tag == ClassTag::Type1 ? Vec{Rational(1), Rational(1), Rational(0)}
                                              : Vec{Rational(1), Rational(1), Rational(1)};
    if (tag == ClassTag::Type3) {
      if (!braid_profile()) return out;
      auto targets = canonical_forms(ClassTag::Type3, {});
      for (size_t i = 0; i < a.n(); ++i)
        for (size_t j = 0; j < a.n(); ++j)
          for (size_t l = 0; l < a.n(); ++l)
            for (size_t m = 0; m < a.n(); ++m) {
              if (i == j || i == l || i == m || j == l || j == m || l == m) continue;
              if (auto fit = try_list_fit(a, i, j, l, m, targets)) {
                out.push_back(std::move(*fit));
                if (first_only) return out;
              }
            }
      return out;
    }

    for (size_t apex : apexes()) {
      const std::vector<size_t>& pencil = points[apex].lines;
      std::vector<size_t> residual;
      for (size_t i = 0; i < a.n(); ++i)
        if (std::find(pencil.begin(), pencil.end(), i) == pencil.end()) residual.push_back(i);
      if (residual.size() != 2) continue;
      for (auto [rx, r4] : {std::pair{residual[0], residual[1]}, std::pair{residual[1], residual[0]}})
        for (size_t py : pencil)
          for (size_t pz : pencil) {
            if (py == pz) continue;
            if (auto fit = try_pencil_fit(a, pencil, rx, r4, py, pz, fourth)) {
              out.push_back(std::move(*fit));
              if (first_only) return out;
            }
          }
    }

    // four lines in general position: Type2 with an empty parameter list
    if (tag == ClassTag::Type2 && a.n() == 4) {
      auto targets = canonical_forms(ClassTag::Type2, {});
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
          for (size_t l = 0; l < 4; ++l)
            for (size_t m = 0; m < 4; ++m) {
              if (i == j || i == l || i == m || j == l || j == m || l == m) continue;
              if (auto fit = try_list_fit(a, i, j, l, m, targets)) {
                out.push_back(std::move(*fit));
                if (first_only) return out;
              }
            }
    }
    return out;
  }
};

bool rational_vec_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Scale freedom of the Type1 family: {t_j} ~ {c t_j}. Representative:
// divide by each element in turn (which puts a 1 in the multiset), sort,
// and keep the lexicographically smallest result.
std::vector<Rational> scale_canonical(const std::vector<Rational>& ts) {
  if (ts.empty()) return {};
  std::vector<Rational> best;
  for (const Rational& r : ts) {
    std::vector<Rational> cand;
    for (const Rational& t : ts) cand.push_back(t / r);
    std::sort(cand.begin(), cand.end());
    if (best.empty() || rational_vec_less(cand, best)) best = cand;
  }
  return best;
}

}  // namespace

std::vector<Rational> canonical_t_multiset(ClassTag tag, const std::vector<Rational>& ts) {
  if (tag == ClassTag::Type3 || ts.empty()) return {};
  if (tag != ClassTag::Type1 && tag != ClassTag::Type2)
    throw ValidationError("canonical_t_multiset applies to Type1/Type2");
  Arrangement canon(3, canonical_forms(tag, ts));
  Fitter fitter(canon);
  std::vector<Rational> best;
  for (const Fit& fit : fitter.fits(tag, /*first_only=*/false)) {
    std::vector<Rational> cand;
    if (tag == ClassTag::Type1) {
      cand = scale_canonical(fit.t_values);
    } else {
      cand = fit.t_values;
      std::sort(cand.begin(), cand.end());
    }
    if (best.empty() || rational_vec_less(cand, best)) best = cand;
  }
  if (best.empty()) throw ConsistencyError("canonical instance does not fit its own family");
  return best;
}

Classification classify(const Arrangement& a) {
  if (a.k() != 3 || a.rank() != 3) {
    Classification c;
    c.tag = ClassTag::NotRank3;
    c.note = a.k() != 3 ? "ambient dimension is " + std::to_string(a.k()) + ", not 3"
                        : "rank is " + std::to_string(a.rank()) + ", not 3";
    return c;
  }
  return classify(a, minimal_quadratic(a));
}

Classification classify(const Arrangement& a, const QuadraticSearch& gates) {
  Classification c;
  if (a.k() != 3 || a.rank() != 3) return classify(a);
  if (gates.dim_d1 > 1) {
    c.tag = ClassTag::HasLinear;
    c.note = "dim D_1 = " + std::to_string(gates.dim_d1);
    return c;
  }
  if (!gates.derivation) {
    c.tag = ClassTag::NoQuadratic;
    c.note = "dim D_2 = dim T = " + std::to_string(gates.dim_d2);
    return c;
  }

  Fitter fitter(a);
  for (ClassTag tag : {ClassTag::Type3, ClassTag::Type1, ClassTag::Type2}) {
    auto fits = fitter.fits(tag, /*first_only=*/true);
    if (fits.empty()) continue;
    c.tag = tag;
    c.t_values = fits.front().t_values;
    c.t_canonical = canonical_t_multiset(tag, c.t_values);
    c.transform = fits.front().transform;
    c.permutation = fits.front().permutation;
    return c;
  }

  c.tag = ClassTag::TheoremViolation;
  c.note = "gates passed (dims " + std::to_string(gates.dim_d1) + "/" +
           std::to_string(gates.dim_d2) + "/" + std::to_string(gates.dim_t) +
           ") but no canonical fit was found";
  return c;
}

}  // namespace arrlog
