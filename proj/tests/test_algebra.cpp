#include <random>

#include "arrlog/matrix.hpp"
#include "arrlog/poly.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arrlog;

namespace {

Rational rnd_rat(std::mt19937_64& g) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  return rat(num(g), den(g));
}

Poly rnd_homogeneous(std::mt19937_64& g, size_t k, unsigned d) {
  Poly p(k);
  for (const Exponents& e : monomials_of_degree(k, d)) {
    std::uniform_int_distribution<int> c(-3, 3);
    p.add_term(e, Rational(c(g)));
  }
  return p;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  Rational q = rat(6, -4);
  CHECK(q.get_den() > 0);
  CHECK(to_string(q) == "-3/2");
  CHECK(rat_from_string("-3/2") == q);
  CHECK(to_string(rat_from_string("4/2")) == "2");
  CHECK_THROWS_AS(rat_from_string("1/0"), ValidationError);
  CHECK_THROWS_AS(rat_from_string("abc"), ValidationError);
  CHECK(pow_rational(rat(-2, 3), 3) == rat(-8, 27));
}

TEST_CASE("rref: identity and a rank-1 matrix") {
  auto id = Matrix::identity(3);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivot_cols == std::vector<size_t>{0, 1, 2});

  Matrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  auto r2 = rref(m);
  CHECK(r2.pivot_cols == std::vector<size_t>{0});
  CHECK(r2.reduced.at(0, 0) == 1);
  CHECK(r2.reduced.at(0, 1) == 2);
  CHECK(r2.reduced.at(1, 0) == 0);
  CHECK(r2.reduced.at(1, 1) == 0);
}

TEST_CASE("rref: cubic evaluation matrix of the 10 generic-5 singular points has rank 10") {
  // the ten pairwise intersection points of x, y, z, x+y+z, x+2y+3z
  std::vector<Vec> forms = {{rat(1), rat(0), rat(0)},
                            {rat(0), rat(1), rat(0)},
                            {rat(0), rat(0), rat(1)},
                            {rat(1), rat(1), rat(1)},
                            {rat(1), rat(2), rat(3)}};
  std::vector<Vec> points;
  for (size_t i = 0; i < forms.size(); ++i)
    for (size_t j = i + 1; j < forms.size(); ++j) {
      const Vec &f = forms[i], &g = forms[j];
      points.push_back({f[1] * g[2] - f[2] * g[1], f[2] * g[0] - f[0] * g[2],
                        f[0] * g[1] - f[1] * g[0]});
    }
  REQUIRE(points.size() == 10);
  auto monos = monomials_of_degree(3, 3);
  std::vector<Vec> rows;
  for (const Vec& p : points) {
    Vec row;
    for (const Exponents& e : monos) {
      Rational v(1);
      for (size_t i = 0; i < 3; ++i)
        for (unsigned j = 0; j < e[i]; ++j) v *= p[i];
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  // independent oracle: a nonzero Bareiss determinant certifies rank 10
  CHECK(oracle::determinant(rows) != 0);
  CHECK(rank(Matrix::from_rows(rows)) == 10);
}

TEST_CASE("nullspace: forced small cases") {
  CHECK(nullspace(Matrix::identity(2)).empty());

  Matrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == -basis[0][1]);
  CHECK(basis[0][1] == 1);
}

TEST_CASE("nullspace: degree-1 constraint system of the Boolean arrangement") {
  // unknowns b_{u,i} (coefficient of x_u in component i), 9 of them; the
  // condition theta(x_i) in <x_i> kills exactly the off-diagonal ones
  Matrix sys(6, 9);
  size_t row = 0;
  for (size_t i = 0; i < 3; ++i)
    for (size_t u = 0; u < 3; ++u) {
      if (u == i) continue;
      sys.at(row++, i * 3 + u) = 1;
    }
  auto basis = nullspace(sys);
  REQUIRE(basis.size() == 3);  // the diagonal coefficients stay free
  for (const Vec& v : basis)
    for (size_t i = 0; i < 3; ++i)
      for (size_t u = 0; u < 3; ++u)
        if (u != i) CHECK(v[i * 3 + u] == 0);
}

TEST_CASE("nullspace vectors satisfy m v = 0 and rank-nullity, random matrices") {
  std::mt19937_64 g(42);
  for (int iter = 0; iter < 40; ++iter) {
    std::uniform_int_distribution<size_t> dim(1, 6);
    size_t rows = dim(g), cols = dim(g);
    Matrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) m.at(r, c) = rnd_rat(g);
    auto basis = nullspace(m);
    CHECK(rank(m) + basis.size() == cols);
    for (const Vec& v : basis)
      for (size_t r = 0; r < rows; ++r) {
        Rational sum(0);
        for (size_t c = 0; c < cols; ++c) sum += m.at(r, c) * v[c];
        CHECK(sum == 0);
      }
    CHECK(rank(m) == oracle::rank([&] {
            std::vector<Vec> rs;
            for (size_t r = 0; r < rows; ++r) rs.push_back(m.row(r));
            return rs;
          }()));
  }
}

TEST_CASE("poly: derivative and exact division basics") {
  Poly xyz = Poly::monomial(3, {1, 1, 1}, rat(1));
  Poly yz = Poly::monomial(3, {0, 1, 1}, rat(1));
  CHECK(xyz.derivative(0) == yz);

  // (x^2 + x y) / x = x + y
  Poly p(3);
  p.add_term({2, 0, 0}, rat(1));
  p.add_term({1, 1, 0}, rat(1));
  auto q = divide_exact(p, Poly::variable(3, 0));
  REQUIRE(q);
  CHECK(*q == Poly::linear_form({rat(1), rat(1), rat(0)}));

  CHECK(!divide_exact(Poly::variable(3, 0), Poly::variable(3, 1)));
  CHECK_THROWS_AS(divide_exact(p, Poly(3)), ValidationError);
}

TEST_CASE("poly: braid partial derivative at (1,1,1), against the expansion oracle") {
  std::vector<Vec> braid = {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)},
                            {rat(0), rat(0), rat(1)}, {rat(1), rat(1), rat(1)},
                            {rat(1), rat(0), rat(1)}, {rat(0), rat(1), rat(1)}};
  auto f_oracle = oracle::expand_product(braid, 3);
  Vec one{rat(1), rat(1), rat(1)};
  Rational expected = oracle::evaluate(oracle::differentiate(f_oracle, 0), one);
  CHECK(expected == 22);  // frozen from the oracle

  Poly f = Poly::constant(3, rat(1));
  for (const Vec& form : braid) f = f * Poly::linear_form(form);
  CHECK(f.derivative(0).evaluate(one) == expected);
  CHECK(f.terms().size() == f_oracle.size());
  CHECK(f.terms().size() == 8);
}

TEST_CASE("poly: Euler identity on random products of linear forms") {
  std::mt19937_64 g(7);
  for (int iter = 0; iter < 25; ++iter) {
    std::uniform_int_distribution<size_t> kd(2, 4);
    std::uniform_int_distribution<unsigned> nd(1, 4);
    size_t k = kd(g);
    unsigned n = nd(g);
    Poly p = Poly::constant(k, rat(1));
    for (unsigned i = 0; i < n; ++i) {
      Vec f(k);
      bool zero = true;
      for (auto& c : f) {
        c = rnd_rat(g);
        if (c != 0) zero = false;
      }
      if (zero) f[0] = 1;
      p = p * Poly::linear_form(f);
    }
    Poly sum(k);
    for (size_t i = 0; i < k; ++i) sum += Poly::variable(k, i) * p.derivative(i);
    CHECK(sum == p * Rational(long(n)));
  }
}

TEST_CASE("poly: divide_exact(p*q, q) == p for random homogeneous p, q") {
  std::mt19937_64 g(12345);
  for (int iter = 0; iter < 40; ++iter) {
    std::uniform_int_distribution<size_t> kd(2, 3);
    std::uniform_int_distribution<unsigned> dd(1, 3);
    size_t k = kd(g);
    Poly p = rnd_homogeneous(g, k, dd(g));
    Poly q = rnd_homogeneous(g, k, dd(g));
    if (q.is_zero()) q = Poly::variable(k, 0);
    if (p.is_zero()) continue;
    auto quot = divide_exact(p * q, q);
    REQUIRE(quot);
    CHECK(*quot == p);
  }
}

TEST_CASE("poly: printing uses graded lex with x > y > z") {
  Poly p(3);
  p.add_term({0, 0, 2}, rat(-1));
  p.add_term({1, 1, 0}, rat(3, 2));
  p.add_term({2, 0, 0}, rat(1));
  CHECK(p.to_string({"x", "y", "z"}) == "x^2 + 3/2*x*y - z^2");
  CHECK(Poly(3).to_string() == "0");
}

TEST_CASE("matrix inverse round trip") {
  std::mt19937_64 g(99);
  for (int iter = 0; iter < 20; ++iter) {
    Matrix m(3, 3);
    for (size_t r = 0; r < 3; ++r)
      for (size_t c = 0; c < 3; ++c) m.at(r, c) = rnd_rat(g);
    auto inv = inverse(m);
    if (!inv) {
      CHECK(rank(m) < 3);
      continue;
    }
    CHECK(m * *inv == Matrix::identity(3));
  }
}
