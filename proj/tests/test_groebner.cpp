#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "depthlab/groebner.hpp"
#include "depthlab/poly_text.hpp"
#include "depthlab/ring.hpp"

using namespace depthlab;

namespace {

const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};
const std::vector<std::string> kXYZW = {"x", "y", "z", "w"};

Poly P(const PrimeField& F, const std::string& s, const std::vector<std::string>& vars) {
  return parse_poly(F, s, vars);
}

// Certificate that `basis` is a Gröbner basis: every S-pair of elements with
// leads in the same position reduces to zero, checked with no criteria.
bool is_groebner(const PrimeField& F, const std::vector<Vec>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto li = vec_lead(basis[i]);
    if (!li) continue;
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto lj = vec_lead(basis[j]);
      if (!lj || li->pos != lj->pos) continue;
      Monomial L = li->mono.lcm(lj->mono);
      Vec s = vec_sub(
          F,
          vec_times_term(F, basis[i], F.inverse(li->coeff), L.divided_by(li->mono)),
          vec_times_term(F, basis[j], F.inverse(lj->coeff), L.divided_by(lj->mono)));
      if (!vec_is_zero(normal_form(F, basis, s))) return false;
    }
  }
  return true;
}

// Membership of v in the span of gens.
bool in_span(const PrimeField& F, const std::vector<Vec>& gens, const Vec& v) {
  return vec_is_zero(normal_form(F, reduced_groebner(F, gens), v));
}

Vec apply_coords(const PrimeField& F, const std::vector<Vec>& gens, const Vec& coords) {
  Vec out = vec_zero(static_cast<int>(gens[0].size()));
  for (std::size_t t = 0; t < gens.size(); ++t) {
    out = vec_add(F, out, vec_times_poly(F, gens[t], coords[t]));
  }
  return out;
}

}  // namespace

TEST_CASE("reduced basis of a simple ideal") {
  PrimeField F(32003);
  std::vector<Poly> gens = {P(F, "x*y", kXY), P(F, "x^2 - y^2", kXY)};
  std::vector<Poly> gb = reduced_groebner_ideal(F, gens);
  REQUIRE(gb.size() == 3);
  CHECK(gb[0] == P(F, "x*y", kXY));
  CHECK(gb[1] == P(F, "x^2 - y^2", kXY));
  CHECK(gb[2] == P(F, "y^3", kXY));
  // Membership.
  CHECK(poly_normal_form(F, gb, P(F, "x^2*y", kXY)).is_zero());
  CHECK(!poly_normal_form(F, gb, P(F, "y^2", kXY)).is_zero());
}

TEST_CASE("reduced basis is canonical across generator presentations") {
  PrimeField F(32003);
  std::vector<Poly> a = {P(F, "x*y", kXY), P(F, "x^2 - y^2", kXY)};
  std::vector<Poly> b = {P(F, "7*x^2 - 7*y^2 + 3*x*y", kXY), P(F, "5*x*y", kXY),
                         P(F, "x^3 - x*y^2", kXY)};
  CHECK(reduced_groebner_ideal(F, a) == reduced_groebner_ideal(F, b));
}

TEST_CASE("groebner property certificate on the twisted cubic") {
  PrimeField F(32003);
  std::vector<Poly> gens = {P(F, "x*z - y^2", kXYZW), P(F, "x*w - y*z", kXYZW),
                            P(F, "y*w - z^2", kXYZW)};
  std::vector<Poly> gb = reduced_groebner_ideal(F, gens);
  std::vector<Vec> wrapped;
  for (const Poly& p : gb) wrapped.push_back(Vec{p});
  CHECK(is_groebner(F, wrapped));
  // Each original generator is in the span.
  for (const Poly& g : gens) {
    CHECK(poly_normal_form(F, gb, g).is_zero());
  }
}

TEST_CASE("module groebner bases over the term-over-position order") {
  PrimeField F(32003);
  Vec g1 = {P(F, "x", kXY), P(F, "y", kXY)};
  Vec g2 = {P(F, "y", kXY), P(F, "x", kXY)};
  std::vector<Vec> gb = reduced_groebner(F, {g1, g2});
  CHECK(is_groebner(F, gb));
  CHECK(in_span(F, {g1, g2}, Vec{P(F, "x^2 - y^2", kXY), Poly()}));
  CHECK(!in_span(F, {g1, g2}, Vec{P(F, "x", kXY), Poly()}));
}

TEST_CASE("normal form returns exact division data") {
  PrimeField F(32003);
  std::vector<Vec> basis = {{P(F, "x^2 + y^2", kXY)}, {P(F, "x*y - 3", kXY)}};
  Vec v = {P(F, "x^3*y + x*y^3 + x^2 + 7", kXY)};
  std::vector<Poly> q;
  Vec r = normal_form(F, basis, v, &q);
  REQUIRE(q.size() == 2);
  Vec recomposed = vec_zero(1);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    recomposed = vec_add(F, recomposed, vec_times_poly(F, basis[k], q[k]));
  }
  recomposed = vec_add(F, recomposed, r);
  CHECK(recomposed == v);
  // No term of the remainder is divisible by a divisor lead.
  for (const Poly& comp : r) {
    for (const Term& t : comp.terms()) {
      for (const Vec& b : basis) {
        CHECK(!vec_lead(b)->mono.divides(t.mono));
      }
    }
  }
}

TEST_CASE("koszul syzygy of two variables") {
  PrimeField F(32003);
  std::vector<Vec> gens = {{P(F, "x", kXY)}, {P(F, "y", kXY)}};
  std::vector<Vec> syz = syzygy_generators(F, gens);
  REQUIRE(!syz.empty());
  for (const Vec& s : syz) {
    CHECK(vec_is_zero(apply_coords(F, gens, s)));
  }
  Vec koszul = {P(F, "y", kXY), P(F, "-x", kXY)};
  CHECK(in_span(F, syz, koszul));
}

TEST_CASE("syzygies of the degree-two monomials") {
  PrimeField F(32003);
  std::vector<Vec> gens = {{P(F, "x^2", kXY)}, {P(F, "x*y", kXY)}, {P(F, "y^2", kXY)}};
  std::vector<Vec> syz = syzygy_generators(F, gens);
  for (const Vec& s : syz) {
    CHECK(vec_is_zero(apply_coords(F, gens, s)));
  }
  Vec s1 = {P(F, "y", kXY), P(F, "-x", kXY), Poly()};
  Vec s2 = {Poly(), P(F, "y", kXY), P(F, "-x", kXY)};
  CHECK(in_span(F, syz, s1));
  CHECK(in_span(F, syz, s2));
  // Conversely every emitted syzygy lies in the span of the two Koszul ones.
  for (const Vec& s : syz) {
    CHECK(in_span(F, {s1, s2}, s));
  }
}

TEST_CASE("syzygy of a redundant generator") {
  PrimeField F(32003);
  Vec g1 = {P(F, "x", kXY), P(F, "y", kXY)};
  Vec g2 = {P(F, "x^2", kXY), P(F, "x*y", kXY)};  // x * g1
  std::vector<Vec> syz = syzygy_generators(F, {g1, g2});
  REQUIRE(syz.size() == 1);
  Vec expect = {P(F, "x", kXY), P(F, "-1", kXY)};
  CHECK(in_span(F, syz, expect));
  CHECK(in_span(F, {expect}, syz[0]));
}

TEST_CASE("zero and duplicate generators contribute syzygies") {
  PrimeField F(32003);
  std::vector<Vec> gens = {{P(F, "x", kXY)}, {Poly()}, {P(F, "x", kXY)}};
  std::vector<Vec> syz = syzygy_generators(F, gens, 0, 2);
  for (const Vec& s : syz) {
    CHECK(vec_is_zero(apply_coords(F, gens, s)));
  }
  Vec eps1 = {Poly(), P(F, "1", kXY), Poly()};
  Vec dup = {P(F, "1", kXY), Poly(), P(F, "-1", kXY)};
  CHECK(in_span(F, syz, eps1));
  CHECK(in_span(F, syz, dup));
}

TEST_CASE("frozen prefix skips pairs but keeps soundness") {
  PrimeField F(32003);
  std::vector<Vec> gens = {{P(F, "x^2", kXY)},
                           {P(F, "x*y", kXY)},
                           {P(F, "y^2", kXY)},
                           {P(F, "x^3 + y^3", kXY)}};
  std::vector<Vec> syz = syzygy_generators(F, gens, 3);
  for (const Vec& s : syz) {
    CHECK(vec_is_zero(apply_coords(F, gens, s)));
  }
  // x^3 + y^3 = x*x^2 + y*y^2 gives a syzygy with last coordinate -1 (up to
  // scale); its projection must be recoverable from the emitted set.
  Vec expect = {P(F, "x", kXY), Poly(), P(F, "y", kXY), P(F, "-1", kXY)};
  CHECK(in_span(F, syz, expect));
}

TEST_CASE("all-zero generators require an explicit variable count") {
  PrimeField F(32003);
  std::vector<Vec> gens = {{Poly()}, {Poly()}};
  CHECK_THROWS_AS(syzygy_generators(F, gens), InputError);
  std::vector<Vec> syz = syzygy_generators(F, gens, 0, 2);
  CHECK(syz.size() == 2);
}

TEST_CASE("ring construction and normal forms") {
  auto R = Ring::quotient_ring(32003, kXYZ, {});
  CHECK(R->is_ambient());
  CHECK(R->krull_dim() == 3);

  auto Q = Ring::quotient_ring(32003, kXYZ, {R->parse("x^2 + y^2 + z^2")});
  CHECK(!Q->is_ambient());
  CHECK(Q->krull_dim() == 2);
  CHECK(Q->is_zero_mod(Q->parse("x^2 + y^2 + z^2")));
  CHECK(Q->nf(Q->parse("x^2")) == Q->parse("-y^2 - z^2"));
  CHECK(!Q->is_zero_mod(Q->parse("x^2")));

  auto A = Q->ambient();
  CHECK(A->is_ambient());
  CHECK(A->krull_dim() == 3);
  CHECK(Ring::same_ring(*A, *R));
}

TEST_CASE("ring validation") {
  PrimeField F(32003);
  CHECK_THROWS_AS(
      Ring::quotient_ring(32003, kXY, {parse_poly(F, "x^2 + y", kXY)}),
      GradingError);
  CHECK_THROWS_AS(
      Ring::quotient_ring(32003, kXY,
                          {parse_poly(F, "x + 1", kXY)}),
      GradingError);
  CHECK_THROWS_AS(Ring::quotient_ring(32003, {}, {}), InputError);
  CHECK_THROWS_AS(Ring::quotient_ring(32003, kXY, {parse_poly(F, "5", kXY)}),
                  InputError);
}

TEST_CASE("quotient by an element") {
  auto R = Ring::quotient_ring(32003, kXY, {});
  auto Q = R->quotient_by(R->parse("x*y"));
  CHECK(Q->krull_dim() == 1);
  CHECK_THROWS_AS(Q->quotient_by(Q->parse("0")), InputError);
  auto L = Ring::quotient_ring(32003, kXY, {R->parse("x")});
  CHECK_THROWS_AS(L->quotient_by(L->parse("x")), InputError);
  CHECK_THROWS_AS(R->quotient_by(R->parse("x + x^2")), GradingError);
}

TEST_CASE("structural ring equality ignores names") {
  auto A = Ring::quotient_ring(32003, {"x", "y"}, {});
  auto B = Ring::quotient_ring(32003, {"s", "t"}, {});
  CHECK(Ring::same_ring(*A, *B));
  auto C = Ring::quotient_ring(32003, {"x", "y"},
                               {A->parse("x*y")});
  CHECK(!Ring::same_ring(*A, *C));
  auto D = Ring::quotient_ring(32003, {"s", "t"},
                               {B->parse("3*s*t")});
  CHECK(Ring::same_ring(*C, *D));
  CHECK_THROWS_AS(Ring::require_same(A, C), RingError);
  CHECK_NOTHROW(Ring::require_same(C, D));
}

TEST_CASE("standard monomials count graded dimensions") {
  // Coordinate ring of the twisted cubic: dim in degree d is 3d + 1.
  PrimeField F(32003);
  auto R = Ring::quotient_ring(
      32003, kXYZW,
      {P(F, "x*z - y^2", kXYZW), P(F, "x*w - y*z", kXYZW), P(F, "y*w - z^2", kXYZW)});
  CHECK(R->krull_dim() == 2);
  for (int d = 1; d <= 6; ++d) {
    CHECK(static_cast<int>(R->standard_monomials(d).size()) == 3 * d + 1);
  }
  CHECK(R->standard_monomials(0).size() == 1);
}

TEST_CASE("krull dimension from lead terms") {
  PrimeField F(32003);
  CHECK(Ring::quotient_ring(32003, kXY, {P(F, "x*y", kXY)})->krull_dim() == 1);
  CHECK(Ring::quotient_ring(32003, kXY, {P(F, "x", kXY), P(F, "y", kXY)})
            ->krull_dim() == 0);
  CHECK(Ring::quotient_ring(32003, kXYZ, {P(F, "x*y", kXYZ)})->krull_dim() == 2);
  CHECK(Ring::quotient_ring(32003, kXYZ,
                            {P(F, "x^2 + y^2 + z^2", kXYZ), P(F, "x*y", kXYZ)})
            ->krull_dim() == 1);
}
