#include "arrlog/quadratic.hpp"

namespace arrlog {

BMatrix extract_b(const Derivation& theta, const Arrangement& normalized) {
  const size_t k = normalized.k();
  if (theta.degree != 2 || theta.components.size() != k)
    throw ValidationError("extract_b expects a quadratic derivation");
  for (size_t i = 0; i < k; ++i) {
    Vec unit(k, Rational(0));
    unit[i] = 1;
    if (i >= normalized.n() || !proportional(normalized.form(i), unit))
      throw ValidationError("arrangement is not in the normalized frame");
  }

  BMatrix out{Matrix(k, k)};
  std::vector<Poly> linear_factors(k, Poly(k));
  for (size_t i = 0; i < k; ++i) {
    auto li = divide_exact(theta.components[i], Poly::variable(k, i));
    if (!li)
      throw ValidationError("component " + std::to_string(i + 1) +
                            " is not divisible by its coordinate");
    linear_factors[i] = *li;
    for (size_t u = 0; u < k; ++u) {
      Exponents e(k, 0);
      e[u] = 1;
      out.b.at(u, i) = li->coeff(e);
    }
  }

  // common-divisor check: any non-constant common divisor of the Q_i would
  // divide the first nonzero Q_{i0} = x_{i0} * L_{i0}, so trying its two
  // linear factors is enough
  size_t i0 = 0;
  while (i0 < k && theta.components[i0].is_zero()) ++i0;
  if (i0 == k) throw ValidationError("zero derivation");
  std::vector<Poly> candidates{Poly::variable(k, i0)};
  if (!linear_factors[i0].is_zero()) candidates.push_back(linear_factors[i0]);
  for (const Poly& cand : candidates) {
    bool divides_all = true;
    for (const Poly& q : theta.components)
      if (!q.is_zero() && !divide_exact(q, cand)) {
        divides_all = false;
        break;
      }
    if (divides_all)
      throw ValidationError("components share the divisor " + cand.to_string() +
                            "; pick another representative");
  }
  return out;
}

bool IdealUV::is_zero() const {
  if (!linear_gen.is_zero()) return false;
  for (const Poly& g : quadratic_gens)
    if (!g.is_zero()) return false;
  return true;
}

std::vector<Poly> IdealUV::generators() const {
  std::vector<Poly> gens{linear_gen};
  gens.insert(gens.end(), quadratic_gens.begin(), quadratic_gens.end());
  return gens;
}

IdealUV build_ideal_uv(const BMatrix& b, size_t u, size_t v) {
  const size_t k = b.k();
  if (!(u < v) || v >= k) throw ValidationError("build_ideal_uv needs u < v < k");
  IdealUV out;
  out.u = u;
  out.v = v;
  auto var = [&](size_t i) { return Poly::variable(k, i); };
  out.linear_gen = var(u) * (b.entry(v, u) - b.entry(v, v)) + var(v) * (b.entry(u, v) - b.entry(u, u));
  for (size_t w = 0; w < k; ++w) {
    if (w == u || w == v) continue;
    Poly g = var(u) * var(v) * (b.entry(w, u) - b.entry(w, v)) +
             var(v) * var(w) * (b.entry(u, w) - b.entry(u, u)) -
             var(u) * var(w) * (b.entry(v, w) - b.entry(v, v));
    out.quadratic_gens.push_back(std::move(g));
  }
  return out;
}

MembershipReport check_membership(const Arrangement& normalized, const BMatrix& b) {
  const size_t k = normalized.k();
  MembershipReport report;
  std::vector<IdealUV> ideals;
  for (size_t u = 0; u < k; ++u)
    for (size_t v = u + 1; v < k; ++v) ideals.push_back(build_ideal_uv(b, u, v));

  auto points = normalized.dual_points();
  for (size_t pi = 0; pi < points.size(); ++pi) {
    const Vec& p = points[pi];
    bool on_some = false;
    for (const IdealUV& ideal : ideals) {
      Vec values;
      bool all_zero = true;
      for (const Poly& g : ideal.generators()) {
        Rational val = g.evaluate(p);
        if (val != 0) all_zero = false;
        values.push_back(val);
      }
      if (all_zero) on_some = true;
      if (p[ideal.u] != 0 && p[ideal.v] != 0) {
        report.entries.push_back({pi, ideal.u, ideal.v, values, all_zero});
        if (!all_zero) report.overall_pass = false;
      }
    }
    report.point_on_some_ideal.push_back(on_some);
    if (!on_some) report.corollary_pass = false;
  }
  return report;
}

PlaneIdealTriple plane_triple(const BMatrix& b) {
  if (b.k() != 3) throw ValidationError("plane_triple needs k = 3");
  PlaneIdealTriple t{
      b.entry(1, 0) - b.entry(1, 1),  // a1 = b_{2,1} - b_{2,2}
      b.entry(0, 1) - b.entry(0, 0),  // b1 = b_{1,2} - b_{1,1}
      b.entry(2, 0) - b.entry(2, 2),  // a2 = b_{3,1} - b_{3,3}
      b.entry(0, 2) - b.entry(0, 0),  // c2 = b_{1,3} - b_{1,1}
      b.entry(2, 1) - b.entry(2, 2),  // b3 = b_{3,2} - b_{3,3}
      b.entry(1, 2) - b.entry(1, 1),  // c3 = b_{2,3} - b_{2,2}
      build_ideal_uv(b, 0, 1), build_ideal_uv(b, 0, 2), build_ideal_uv(b, 1, 2)};
  return t;
}

}  // namespace arrlog
