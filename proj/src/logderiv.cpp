#include "arrlog/logderiv.hpp"

#include <map>

namespace arrlog {

Derivation euler_derivation(size_t k) {
  Derivation e{1, {}};
  for (size_t i = 0; i < k; ++i) e.components.push_back(Poly::variable(k, i));
  return e;
}

Poly apply_derivation(const Derivation& theta, const Poly& f) {
  Poly out(f.nvars());
  for (size_t i = 0; i < theta.components.size(); ++i)
    out += theta.components[i] * f.derivative(i);
  return out;
}

Poly apply_to_form(const Derivation& theta, const Vec& coeffs) {
  Poly out(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) out += theta.components[i] * coeffs[i];
  return out;
}

Derivation add(const Derivation& a, const Derivation& b) {
  if (a.degree != b.degree) throw ValidationError("adding derivations of different degrees");
  Derivation out{a.degree, {}};
  for (size_t i = 0; i < a.components.size(); ++i)
    out.components.push_back(a.components[i] + b.components[i]);
  return out;
}

Derivation scale(const Derivation& a, const Rational& c) {
  Derivation out{a.degree, {}};
  for (const Poly& p : a.components) out.components.push_back(p * c);
  return out;
}

Derivation shift(const Derivation& theta, size_t var) {
  size_t k = theta.components.size();
  Derivation out{theta.degree + 1, {}};
  Poly xv = Poly::variable(k, var);
  for (const Poly& p : theta.components) out.components.push_back(xv * p);
  return out;
}

Vec derivation_coefficients(const Derivation& theta) {
  size_t k = theta.components.size();
  auto monos = monomials_of_degree(k, theta.degree);
  Vec out;
  out.reserve(k * monos.size());
  for (const Poly& p : theta.components)
    for (const Exponents& e : monos) out.push_back(p.coeff(e));
  return out;
}

Derivation derivation_from_coefficients(size_t k, unsigned degree, const Vec& coeffs) {
  auto monos = monomials_of_degree(k, degree);
  Derivation out{degree, {}};
  for (size_t i = 0; i < k; ++i) {
    Poly p(k);
    for (size_t a = 0; a < monos.size(); ++a) p.add_term(monos[a], coeffs[i * monos.size() + a]);
    out.components.push_back(std::move(p));
  }
  return out;
}

DerivationSpace derivation_space(const Arrangement& a, unsigned degree) {
  const size_t k = a.k();
  const auto monos = monomials_of_degree(k, degree);
  const size_t m = monos.size();

  // rows: for each form, the coefficients (in the variables other than the
  // form's pivot) of theta(l) after substituting the pivot variable out of l
  struct FormRows {
    size_t pivot;
    std::vector<Poly> subs_pow;              // powers of the substituted pivot expression
    std::map<Exponents, size_t> row_of;      // reduced monomial -> local row
  };

  std::vector<FormRows> frs;
  size_t total_rows = 0;
  for (const Vec& f : a.forms()) {
    FormRows fr;
    fr.pivot = 0;
    while (f[fr.pivot] == 0) ++fr.pivot;
    Vec rest(k, Rational(0));
    for (size_t u = 0; u < k; ++u)
      if (u != fr.pivot) rest[u] = -f[u] / f[fr.pivot];
    Poly s = Poly::linear_form(rest);
    fr.subs_pow.push_back(Poly::constant(k, Rational(1)));
    for (unsigned e = 1; e <= degree; ++e) fr.subs_pow.push_back(fr.subs_pow.back() * s);
    for (const Exponents& e : monos)
      if (e[fr.pivot] == 0) fr.row_of.emplace(e, total_rows + fr.row_of.size());
    total_rows += fr.row_of.size();
    frs.push_back(std::move(fr));
  }

  Matrix sys(total_rows, k * m);
  for (size_t j = 0; j < a.n(); ++j) {
    const Vec& f = a.form(j);
    const FormRows& fr = frs[j];
    for (size_t i = 0; i < k; ++i) {
      if (f[i] == 0) continue;
      for (size_t col = 0; col < m; ++col) {
        const Exponents& mu = monos[col];
        // substitute the pivot variable inside x^mu and scale by f_i
        Exponents fixed = mu;
        fixed[fr.pivot] = 0;
        Poly reduced = Poly::monomial(k, fixed, f[i]) * fr.subs_pow[mu[fr.pivot]];
        for (const auto& [e, c] : reduced.terms()) sys.at(fr.row_of.at(e), i * m + col) += c;
      }
    }
  }

  DerivationSpace out{degree, {}};
  for (const Vec& v : nullspace(sys)) out.basis.push_back(derivation_from_coefficients(k, degree, v));
  return out;
}

bool is_logarithmic(const Derivation& theta, const Arrangement& a) {
  for (size_t j = 0; j < a.n(); ++j) {
    Poly image = apply_to_form(theta, a.form(j));
    if (!divide_exact(image, a.form_poly(j))) return false;
  }
  return true;
}

QuadraticSearch minimal_quadratic(const Arrangement& a) {
  if (!a.is_essential()) throw ValidationError("minimal_quadratic requires an essential arrangement");
  DerivationSpace d1 = derivation_space(a, 1);
  DerivationSpace d2 = derivation_space(a, 2);

  RowSpace t_span;
  for (const Derivation& theta : d1.basis)
    for (size_t j = 0; j < a.k(); ++j) t_span.add(derivation_coefficients(shift(theta, j)));

  QuadraticSearch out;
  out.dim_d1 = d1.dim();
  out.dim_d2 = d2.dim();
  out.dim_t = t_span.rank();
  for (const Derivation& theta : d2.basis) {
    if (!t_span.contains(derivation_coefficients(theta))) {
      out.derivation = theta;
      break;
    }
  }
  return out;
}

Syzygy derivation_to_syzygy(const Derivation& theta, const Arrangement& a) {
  Poly f = a.defining_polynomial();
  Poly image = apply_derivation(theta, f);
  auto p = divide_exact(image, f);
  if (!p) throw ValidationError("theta(F) is not divisible by F: derivation is not logarithmic");
  const long n = long(a.n());
  Syzygy out;
  out.scale = *p;
  bool all_zero = true;
  for (size_t i = 0; i < a.k(); ++i) {
    Poly comp = theta.components[i] * Rational(n) - *p * Poly::variable(a.k(), i);
    if (!comp.is_zero()) all_zero = false;
    out.components.push_back(std::move(comp));
  }
  if (all_zero)
    throw ValidationError("derivation is a polynomial multiple of the Euler derivation");
  return out;
}

}  // namespace arrlog
