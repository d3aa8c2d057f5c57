#include "arrlog/poly.hpp"

#include <sstream>

namespace arrlog {

namespace {

void gen_monomials(size_t nvars, unsigned degree, size_t pos, Exponents& cur,
                   std::vector<Exponents>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = int(degree); e >= 0; --e) {
    cur[pos] = unsigned(e);
    gen_monomials(nvars, degree - unsigned(e), pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(size_t nvars, unsigned degree) {
  std::vector<Exponents> out;
  if (nvars == 0) return out;
  Exponents cur(nvars, 0);
  gen_monomials(nvars, degree, 0, cur, out);
  return out;
}

Poly Poly::monomial(size_t nvars, Exponents e, Rational c) {
  Poly p(nvars);
  if (e.size() != nvars) throw ValidationError("monomial exponent length mismatch");
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(size_t nvars, size_t index) {
  Exponents e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, e, Rational(1));
}

Poly Poly::linear_form(const Vec& coeffs) {
  Poly p(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Poly Poly::constant(size_t nvars, Rational c) {
  return monomial(nvars, Exponents(nvars, 0), std::move(c));
}

Rational Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  if (e.size() != nvars_) throw ValidationError("term exponent length mismatch");
  if (!terms_.empty() && total_degree(e) != total_degree(terms_.begin()->first))
    throw ValidationError("inhomogeneous term insertion");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (nvars_ != other.nvars_) throw ValidationError("polynomial variable count mismatch");
  if (!is_zero() && !other.is_zero() && degree() != other.degree())
    throw ValidationError("adding homogeneous polynomials of different degrees");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly Poly::operator*(const Poly& other) const {
  if (nvars_ != other.nvars_) throw ValidationError("polynomial variable count mismatch");
  Poly out(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) {
      Exponents e(nvars_);
      for (size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly Poly::operator*(const Rational& c) const {
  Poly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, q] : terms_) out.terms_.emplace(e, q * c);
  return out;
}

Poly Poly::derivative(size_t var) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    out.add_term(d, c * long(e[var]));
  }
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly out = Poly::constant(nvars_, Rational(1));
  for (unsigned i = 0; i < e; ++i) out = out * (*this);
  return out;
}

Rational Poly::evaluate(const Vec& point) const {
  if (point.size() != nvars_) throw ValidationError("evaluation point dimension mismatch");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) t *= pow_rational(point[i], e[i]);
    sum += t;
  }
  return sum;
}

std::optional<Poly> divide_exact(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw ValidationError("division by the zero polynomial");
  if (p.is_zero()) return Poly(p.nvars());
  if (p.nvars() != q.nvars()) throw ValidationError("polynomial variable count mismatch");
  // single-divisor division: for homogeneous p, q either the quotient is
  // exact or some leading term fails monomial divisibility
  const auto& [lq, cq] = *q.terms().begin();
  Poly rem = p;
  Poly quot(p.nvars());
  while (!rem.is_zero()) {
    const auto& [lr, cr] = *rem.terms().begin();
    Exponents e(p.nvars());
    for (size_t i = 0; i < p.nvars(); ++i) {
      if (lr[i] < lq[i]) return std::nullopt;
      e[i] = lr[i] - lq[i];
    }
    Poly t = Poly::monomial(p.nvars(), e, cr / cq);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var_name = [&](size_t i) {
    if (i < names.size()) return names[i];
    return "x" + std::to_string(i + 1);
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool has_var = total_degree(e) > 0;
    if (a != 1 || !has_var) {
      os << arrlog::to_string(a);
      if (has_var) os << "*";
    }
    bool first_var = true;
    for (size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      os << var_name(i);
      if (e[i] > 1) os << "^" << e[i];
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

}  // namespace arrlog
