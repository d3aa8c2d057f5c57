#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrlog/rational.hpp"

namespace arrlog {

/// Exponent vector; length = ambient variable count.
using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

/// Graded lexicographic order with x_1 > x_2 > ... > x_k, highest first.
/// This is the canonical term order for printing and for coefficient
/// vectors of linear systems.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponent vectors
  }
};

/// All monomials of the given total degree, in GrlexGreater order.
std::vector<Exponents> monomials_of_degree(size_t nvars, unsigned degree);

/// Sparse homogeneous polynomial over the rationals. The zero polynomial
/// has an empty term map; a nonzero polynomial stores only nonzero
/// coefficients and all its monomials share one total degree.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  explicit Poly(size_t nvars = 0) : nvars_(nvars) {}

  static Poly monomial(size_t nvars, Exponents e, Rational c);
  static Poly variable(size_t nvars, size_t index);
  static Poly linear_form(const Vec& coeffs);
  static Poly constant(size_t nvars, Rational c);

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 marks the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : int(total_degree(terms_.begin()->first)); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Exponents& e) const;

  /// Adds c * x^e, keeping the map free of zeros. Throws if it would
  /// break homogeneity.
  void add_term(const Exponents& e, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator*(const Poly& other) const;
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& other) const = default;

  Poly derivative(size_t var) const;
  Poly pow(unsigned e) const;
  Rational evaluate(const Vec& point) const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  size_t nvars_;
  TermMap terms_;
};

/// Exact quotient p / q, or nullopt when q does not divide p.
std::optional<Poly> divide_exact(const Poly& p, const Poly& q);

}  // namespace arrlog
