#include <random>

#include "arrlog/arrangement.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace arrlog;

namespace {

Arrangement braid() {
  return Arrangement::parse_text("vars: x,y,z\nx\ny\nz\nx+y+z\nx+z\ny+z\n");
}

}  // namespace

TEST_CASE("parse: braid file") {
  Arrangement a = braid();
  CHECK(a.n() == 6);
  CHECK(a.k() == 3);
  CHECK(a.form(3) == Vec{rat(1), rat(1), rat(1)});
}

TEST_CASE("parse: coefficients, comments, json") {
  Arrangement a = Arrangement::parse_text("vars: x,y,z\n# comment\n2x - 1/3y + z\n\nx\n");
  CHECK(a.form(0) == Vec{rat(2), rat(-1, 3), rat(1)});

  Arrangement j = Arrangement::parse(R"({"vars": ["x","y"], "forms": [[1,0],["1/2","-3"]]})");
  CHECK(j.k() == 2);
  CHECK(j.form(1) == Vec{rat(1, 2), rat(-3)});
}

TEST_CASE("parse: errors carry line numbers") {
  CHECK_THROWS_WITH_AS(Arrangement::parse_text("vars: x,y\nx\nx\n"),
                       doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_WITH_AS(Arrangement::parse_text("vars: x,y\nx\n2x\n"),
                       doctest::Contains("proportional"), ParseError);
  CHECK_THROWS_AS(Arrangement::parse_text("vars: x,y\nx - x\n"), ParseError);   // zero form
  CHECK_THROWS_AS(Arrangement::parse_text("vars: x,y\nx + w\n"), ParseError);   // unknown var
  CHECK_THROWS_AS(Arrangement::parse_text("x\ny\n"), ParseError);               // no header
  CHECK_THROWS_AS(Arrangement::parse_text("vars: x,y\nx + 1\n"), ParseError);   // constant term
}

TEST_CASE("type-(1) instance with t_1 = 2 parses") {
  Arrangement a = Arrangement::parse_text("vars: x,y,z\nx\ny\nz\nx+y\ny+2z\n");
  CHECK(a.n() == 5);
  CHECK(a.form(4) == Vec{rat(0), rat(1), rat(2)});
}

TEST_CASE("rank and essentiality") {
  CHECK(Arrangement(3, {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}})
            .is_essential());
  Arrangement flat(3, {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(1), rat(1), rat(0)}});
  CHECK(flat.rank() == 2);
  CHECK(!flat.is_essential());
  CHECK(braid().rank() == 3);
}

TEST_CASE("defining polynomial: explicit and against the oracle") {
  Arrangement a(2, {{rat(1), rat(0)}, {rat(0), rat(1)}});
  Poly xy = Poly::monomial(2, {1, 1}, rat(1));
  CHECK(a.defining_polynomial() == xy);

  // {x,y,z,x+y} -> x^2 y z + x y^2 z
  Arrangement b = Arrangement::parse_text("vars: x,y,z\nx\ny\nz\nx+y\n");
  Poly expected(3);
  expected.add_term({2, 1, 1}, rat(1));
  expected.add_term({1, 2, 1}, rat(1));
  CHECK(b.defining_polynomial() == expected);

  Poly f = braid().defining_polynomial();
  CHECK(f.degree() == 6);
  auto f_oracle = oracle::expand_product(braid().forms(), 3);
  CHECK(f.terms().size() == f_oracle.size());
  for (const auto& [e, c] : f.terms()) CHECK(f_oracle.at(e) == c);
}

TEST_CASE("defining polynomial factors back into the forms") {
  Arrangement a = braid();
  Poly rem = a.defining_polynomial();
  for (size_t i = 0; i < a.n(); ++i) {
    auto q = divide_exact(rem, a.form_poly(i));
    REQUIRE(q);
    rem = *q;
  }
  CHECK(rem.degree() == 0);
}

TEST_CASE("jacobian generators") {
  Arrangement a(2, {{rat(1), rat(0)}, {rat(0), rat(1)}});
  auto gens = a.jacobian_generators();
  CHECK(gens[0] == Poly::variable(2, 1));
  CHECK(gens[1] == Poly::variable(2, 0));

  Arrangement boolean3 = Arrangement::parse_text("vars: x,y,z\nx\ny\nz\n");
  auto g3 = boolean3.jacobian_generators();
  CHECK(g3[0] == Poly::monomial(3, {0, 1, 1}, rat(1)));

  // Euler check on the braid: sum x_i F_i = 6 F
  Arrangement br = braid();
  Poly f = br.defining_polynomial();
  Poly sum(3);
  auto jac = br.jacobian_generators();
  for (size_t i = 0; i < 3; ++i) {
    CHECK(jac[i].degree() == 5);
    sum += Poly::variable(3, i) * jac[i];
  }
  CHECK(sum == f * rat(6));
}

TEST_CASE("dual points are normalized, idempotently") {
  Arrangement a(3, {{rat(0), rat(2), rat(4)}, {rat(2), rat(4), rat(0)}});
  auto pts = a.dual_points();
  CHECK(pts[0] == Vec{rat(0), rat(1), rat(2)});
  CHECK(pts[1] == Vec{rat(1), rat(2), rat(0)});
  CHECK(normalize_projective(pts[0]) == pts[0]);
}

TEST_CASE("braid dual points match the six stated ones") {
  auto pts = braid().dual_points();
  std::vector<Vec> expected = {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)},
                               {rat(0), rat(0), rat(1)}, {rat(1), rat(1), rat(1)},
                               {rat(1), rat(0), rat(1)}, {rat(0), rat(1), rat(1)}};
  CHECK(pts == expected);
}

TEST_CASE("normalize_coordinates: identity when the frame is already standard") {
  Arrangement a = Arrangement::parse_text("vars: x,y,z\nx\ny\nz\nx+y+z\n");
  CoordinateFrame f = normalize_coordinates(a);
  CHECK(f.transform == Matrix::identity(3));
  CHECK(f.permutation == std::vector<size_t>{0, 1, 2, 3});
  CHECK(f.arrangement.forms() == a.forms());
}

TEST_CASE("normalize_coordinates: k = 2 forced case") {
  Arrangement a(2, {{rat(1), rat(1)}, {rat(1), rat(-1)}});
  CoordinateFrame f = normalize_coordinates(a);
  CHECK(f.arrangement.form(0) == Vec{rat(1), rat(0)});
  CHECK(f.arrangement.form(1) == Vec{rat(0), rat(1)});
}

TEST_CASE("normalize_coordinates: greedy choice and round trip") {
  Arrangement a = Arrangement::parse_text("vars: x,y,z\nx+y+z\nx\ny\nz\n");
  CoordinateFrame f = normalize_coordinates(a);
  // greedy keeps x+y+z, x, y; the fourth form is z expressed in the new frame
  CHECK(f.permutation == std::vector<size_t>{0, 1, 2, 3});
  for (size_t i = 0; i < 3; ++i) {
    Vec unit(3, rat(0));
    unit[i] = 1;
    CHECK(f.arrangement.form(i) == unit);
  }
  // round trip through the inverse transform recovers the original forms
  auto inv = inverse(f.transform);
  REQUIRE(inv);
  for (size_t i = 0; i < a.n(); ++i)
    CHECK(proportional(row_times_matrix(f.arrangement.form(i), *inv), a.form(f.permutation[i])));
  CHECK_THROWS_AS(
      normalize_coordinates(Arrangement(3, {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}})),
      ValidationError);
}

TEST_CASE("normalize_coordinates: random essential arrangements round trip") {
  std::mt19937_64 g(31337);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<Vec> forms;
    while (forms.size() < 5) {
      Vec f{rat(coeff(g)), rat(coeff(g)), rat(coeff(g))};
      if (f == Vec{rat(0), rat(0), rat(0)}) continue;
      bool dup = false;
      for (const Vec& h : forms) dup |= proportional(f, h);
      if (!dup) forms.push_back(f);
    }
    Arrangement a(3, forms);
    if (!a.is_essential()) continue;
    CoordinateFrame f = normalize_coordinates(a);
    auto inv = inverse(f.transform);
    REQUIRE(inv);
    for (size_t i = 0; i < a.n(); ++i)
      CHECK(row_times_matrix(f.arrangement.form(i), *inv) == a.form(f.permutation[i]));
  }
}
