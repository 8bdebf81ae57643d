#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "depthlab/free_module.hpp"
#include "depthlab/poly_text.hpp"
#include "depthlab/ring.hpp"

using namespace depthlab;

namespace {
Monomial mono(std::initializer_list<int> exps) {
  return Monomial(static_cast<int>(exps.size()), exps);
}
}  // namespace

TEST_CASE("graded reverse lexicographic comparisons") {
  // Two variables: x^2 > x*y > y^2.
  CHECK(monomial_compare(mono({2, 0}), mono({1, 1})) == Ordering::GT);
  CHECK(monomial_compare(mono({1, 1}), mono({0, 2})) == Ordering::GT);
  // Degree dominates.
  CHECK(monomial_compare(mono({0, 3}), mono({2, 0})) == Ordering::GT);
  CHECK(monomial_compare(mono({1, 1}), mono({1, 1})) == Ordering::EQ);
  // Three variables, degree 2: x^2 > xy > y^2 > xz > yz > z^2.
  std::vector<Monomial> expect = {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                  mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
  for (std::size_t i = 0; i < expect.size(); ++i) {
    for (std::size_t j = 0; j < expect.size(); ++j) {
      Ordering want = i < j ? Ordering::GT : (i == j ? Ordering::EQ : Ordering::LT);
      CHECK(monomial_compare(expect[i], expect[j]) == want);
    }
  }
  CHECK(monomials_of_degree(3, 2) == expect);
}

TEST_CASE("comparing mismatched variable counts throws") {
  CHECK_THROWS_AS(monomial_compare(mono({1, 0}), mono({1, 0, 0})), ShapeError);
  CHECK_THROWS_AS(mono({1, 0}).times(mono({1, 0, 0})), ShapeError);
}

TEST_CASE("monomial divisibility, quotient, lcm, gcd") {
  Monomial a = mono({2, 1, 0});
  Monomial b = mono({1, 1, 0});
  Monomial c = mono({0, 0, 1});
  CHECK(b.divides(a));
  CHECK(!a.divides(b));
  CHECK(a.divided_by(b) == mono({1, 0, 0}));
  CHECK_THROWS_AS(b.divided_by(a), ShapeError);
  CHECK(a.lcm(c) == mono({2, 1, 1}));
  CHECK(a.gcd(b) == b);
  CHECK(b.coprime(c));
  CHECK(!a.coprime(b));
  CHECK(a.times(c).degree() == 4);
}

TEST_CASE("order is compatible with multiplication") {
  std::vector<Monomial> ms = monomials_of_degree(3, 2);
  std::vector<Monomial> fs = monomials_of_degree(3, 1);
  for (const Monomial& u : ms) {
    for (const Monomial& v : ms) {
      Ordering c = monomial_compare(u, v);
      for (const Monomial& w : fs) {
        CHECK(monomial_compare(u.times(w), v.times(w)) == c);
      }
    }
  }
}

TEST_CASE("polynomial product over F_5") {
  PrimeField F(5);
  std::vector<std::string> vars = {"x", "y"};
  Poly xpy = parse_poly(F, "x + y", vars);
  Poly xmy = parse_poly(F, "x - y", vars);
  Poly prod = poly_multiply(F, xpy, xmy);
  CHECK(prod == parse_poly(F, "x^2 + 4*y^2", vars));
  CHECK(poly_to_string(prod, vars) == "x^2 + 4*y^2");
}

TEST_CASE("collect merges and cancels") {
  PrimeField F(7);
  std::vector<std::string> vars = {"x", "y"};
  Poly p = parse_poly(F, "3*x*y + 4*x*y + x", vars);
  CHECK(poly_to_string(p, vars) == "x");
  Poly q = parse_poly(F, "x^2 - x^2 + y - y", vars);
  CHECK(q.is_zero());
  CHECK(poly_to_string(q, vars) == "0");
}

TEST_CASE("homogeneity and degree") {
  PrimeField F(5);
  std::vector<std::string> vars = {"x", "y", "z"};
  CHECK(parse_poly(F, "x^2 + y*z", vars).is_homogeneous());
  CHECK(!parse_poly(F, "x^2 + y", vars).is_homogeneous());
  CHECK(parse_poly(F, "x^3*y + z^4", vars).degree() == 4);
  CHECK(Poly().degree() == -1);
  CHECK(Poly().is_homogeneous());
}

TEST_CASE("polynomial arithmetic properties") {
  PrimeField F(32003);
  std::vector<std::string> vars = {"x", "y"};
  std::vector<Poly> sample = {
      parse_poly(F, "x^2 + 3*x*y", vars), parse_poly(F, "y^2 - 7", vars),
      parse_poly(F, "x*y + y + 1", vars), Poly(),
      parse_poly(F, "31999*x^3 + 5", vars)};
  for (const Poly& a : sample) {
    CHECK(poly_add(F, a, poly_neg(F, a)).is_zero());
    for (const Poly& b : sample) {
      CHECK(poly_multiply(F, a, b) == poly_multiply(F, b, a));
      CHECK(poly_add(F, a, b) == poly_add(F, b, a));
      if (!a.is_zero() && !b.is_zero()) {
        CHECK(poly_multiply(F, a, b).degree() == a.degree() + b.degree());
      }
      for (const Poly& c : sample) {
        Poly lhs = poly_multiply(F, a, poly_add(F, b, c));
        Poly rhs = poly_add(F, poly_multiply(F, a, b), poly_multiply(F, a, c));
        CHECK(lhs == rhs);
        CHECK(poly_multiply(F, poly_multiply(F, a, b), c) ==
              poly_multiply(F, a, poly_multiply(F, b, c)));
      }
    }
  }
}

TEST_CASE("parser handles implicit multiplication and powers") {
  PrimeField F(101);
  std::vector<std::string> vars = {"x", "y"};
  CHECK(parse_poly(F, "3x^2y", vars) == parse_poly(F, "3*x^2*y", vars));
  CHECK(parse_poly(F, "xy + yx", vars) == parse_poly(F, "2*x*y", vars));
  CHECK(parse_poly(F, "-x + 2", vars) == parse_poly(F, "2 - x", vars));
  CHECK(parse_poly(F, "104", vars) == parse_poly(F, "3", vars));
}

TEST_CASE("parser reports positions") {
  PrimeField F(5);
  std::vector<std::string> vars = {"x", "y"};
  CHECK_THROWS_AS(parse_poly(F, "x + w", vars), ParseError);
  CHECK_THROWS_AS(parse_poly(F, "", vars), ParseError);
  CHECK_THROWS_AS(parse_poly(F, "x +", vars), ParseError);
  CHECK_THROWS_AS(parse_poly(F, "x ^ y", vars), ParseError);
  try {
    parse_poly(F, "x + w", vars, 4, 10);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(e.column == 14);
  }
}

TEST_CASE("longest variable name wins") {
  PrimeField F(5);
  std::vector<std::string> vars = {"x", "x1"};
  Poly p = parse_poly(F, "x1 + x", vars);
  CHECK(p.nterms() == 2);
  CHECK(poly_to_string(p, vars) == "x + x1");
}

TEST_CASE("vector leads use the term-over-position order") {
  PrimeField F(5);
  std::vector<std::string> vars = {"x", "y"};
  Poly x = parse_poly(F, "x", vars);
  Poly y = parse_poly(F, "y", vars);
  // (y, x): the x-term at position 1 beats the y-term at position 0.
  Vec v = {y, x};
  auto lead = vec_lead(v);
  REQUIRE(lead.has_value());
  CHECK(lead->pos == 1);
  CHECK(lead->mono == Monomial::variable(2, 0));
  // Equal monomials: the smaller position wins.
  Vec w = {x, x};
  auto lw = vec_lead(w);
  REQUIRE(lw.has_value());
  CHECK(lw->pos == 0);
  CHECK(!vec_lead(vec_zero(3)).has_value());
}

TEST_CASE("graded free module degrees include twists") {
  PrimeField F(5);
  std::vector<std::string> vars = {"x", "y"};
  FreeModule M({0, 1});
  Vec v = {parse_poly(F, "x^2", vars), parse_poly(F, "y", vars)};
  CHECK(vec_is_homogeneous(M, v));
  CHECK(vec_degree(M, v) == 2);
  FreeModule N({0, 0});
  CHECK(!vec_is_homogeneous(N, v));
  CHECK_THROWS_AS(vec_degree(N, v), GradingError);
  CHECK_THROWS_AS(vec_degree(M, vec_zero(2)), InputError);
}
