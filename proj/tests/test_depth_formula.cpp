#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "depthlab/depth_formula.hpp"
#include "depthlab/errors.hpp"

using namespace depthlab;

namespace {

RingPtr poly2() { return Ring::polynomial_ring(32003, {"x", "y"}); }
RingPtr poly3() { return Ring::polynomial_ring(32003, {"x", "y", "z"}); }

RingPtr hypersurface_xy() {
  auto s = poly2();
  return Ring::quotient_ring(32003, {"x", "y"}, {s->parse("x*y")});
}

RingPtr quadric3() {
  auto s = poly3();
  return Ring::quotient_ring(32003, {"x", "y", "z"},
                             {s->parse("x*x+y*y+z*z")});
}

// R/(f) as a cyclic module with one relation row.
FPModule cyclic(const RingPtr& r, const std::string& f) {
  return FPModule(r, FreeModule({0}), {Vec{r->parse(f)}});
}

// Rank-4 matrix factorization module over the quadric cone: the cokernel of
// a matrix E with E * E^T = (x^2+y^2+z^2) * I.
FPModule mf_module(const RingPtr& r) {
  FreeModule target({0, 0, 0, 0});
  FreeModule source({1, 1, 1, 1});
  std::vector<Vec> cols = {
      Vec{r->parse("x"), r->parse("y"), r->parse("z"), r->parse("0")},
      Vec{r->parse("-y"), r->parse("x"), r->parse("0"), r->parse("z")},
      Vec{r->parse("z"), r->parse("0"), r->parse("-x"), r->parse("y")},
      Vec{r->parse("0"), r->parse("z"), r->parse("-y"), r->parse("-x")}};
  return cokernel(make_map(r, target, source, std::move(cols)));
}

}  // namespace

TEST_CASE("defect record on the two-variable coordinate-axis pair") {
  auto s = poly2();
  FPModule m = cyclic(s, "x");
  FPModule n = cyclic(s, "y");
  DefectRecord rec = depth_formula_defect(m, n, 6);
  CHECK(rec.depth_m == 1);
  CHECK(rec.depth_n == 1);
  CHECK(rec.depth_r == 2);
  CHECK(rec.depth_tensor == 0);
  CHECK(rec.defect == 0);
  CHECK(rec.tor_verdict.outcome == Outcome::Holds);
  CHECK(rec.applicable());
}

TEST_CASE("defect record on a free pair is zero") {
  auto s = poly2();
  FPModule f = free_fp(s, {0, 1});
  DefectRecord rec = depth_formula_defect(f, f, 6);
  CHECK(rec.depth_m == 2);
  CHECK(rec.depth_n == 2);
  CHECK(rec.depth_r == 2);
  CHECK(rec.depth_tensor == 2);
  CHECK(rec.defect == 0);
  CHECK(rec.applicable());
}

TEST_CASE("defect record flags the hypersurface self-pair as not applicable") {
  auto r = hypersurface_xy();
  FPModule m = cyclic(r, "x");
  DefectRecord rec = depth_formula_defect(m, m, 8);
  CHECK(rec.depth_m == 1);
  CHECK(rec.depth_n == 1);
  CHECK(rec.depth_r == 1);
  CHECK(rec.depth_tensor == 1);
  CHECK(rec.defect == 0);
  CHECK(rec.tor_verdict.outcome == Outcome::Fails);
  CHECK(rec.tor_verdict.fail_index == 1);
  REQUIRE(rec.tor_verdict.witness.has_value());
  CHECK(rec.tor_verdict.witness->hilbert_value(1) == 1);
  CHECK(rec.tor_verdict.witness->hilbert_value(2) == 0);
  CHECK_FALSE(rec.applicable());
}

TEST_CASE("defect record rejects zero modules") {
  auto s = poly2();
  CHECK_THROWS_AS(depth_formula_defect(zero_fp(s), ring_as_module(s), 4),
                  InputError);
  CHECK_THROWS_AS(depth_formula_defect(ring_as_module(s), zero_fp(s), 4),
                  InputError);
}

TEST_CASE("regular element search on the free module finds a linear form") {
  auto s = poly2();
  auto res = find_regular_element({ring_as_module(s)}, 3, 20, 0);
  REQUIRE(res.found());
  CHECK(res.element->degree() == 1);
  CHECK(regular_on(ring_as_module(s), *res.element));

  auto res2 = find_regular_element({ring_as_module(s)}, 3, 20, 0);
  REQUIRE(res2.found());
  CHECK(*res2.element == *res.element);  // same seed, same draw
}

TEST_CASE("regular element search reports a depth-zero witness") {
  auto s = poly2();
  auto res = find_regular_element({residue_field(s)}, 3, 20, 0);
  CHECK_FALSE(res.found());
  REQUIRE(res.failure.has_value());
  CHECK(*res.failure == SearchFailure::DepthZeroWitness);
  CHECK(res.depth_zero_index == 0);

  auto mixed =
      find_regular_element({ring_as_module(s), residue_field(s)}, 3, 20, 0);
  CHECK_FALSE(mixed.found());
  CHECK(mixed.depth_zero_index == 1);
}

TEST_CASE("regular element search avoids the excluded axis") {
  auto s = poly2();
  FPModule sx = cyclic(s, "x");
  auto res = find_regular_element({ring_as_module(s), sx}, 3, 20, 7);
  REQUIRE(res.found());
  CHECK(res.element->degree() == 1);
  // Regularity on S/(x) forces a nonzero y-coefficient.
  CHECK(regular_on(sx, *res.element));
  CHECK(regular_on(ring_as_module(s), *res.element));
}

TEST_CASE("regular element search rejects zero modules") {
  auto s = poly2();
  CHECK_THROWS_AS(find_regular_element({zero_fp(s)}, 3, 10, 0), InputError);
  CHECK_THROWS_AS(find_regular_element({}, 3, 10, 0), InputError);
}

TEST_CASE("reduce_pair on the free pair drops every depth by one") {
  auto s = poly2();
  FPModule r = ring_as_module(s);
  ReductionStep step = reduce_pair(r, r, 0);
  CHECK(step.element.degree() == 1);
  CHECK(step.ring_before == s);
  CHECK(step.ring_after->relations().size() == 1);
  CHECK(step.certified ==
        std::vector<std::string>{"R", "M", "N", "MtensorN"});
  CHECK(step.modules_before.at("M").depth() == 2);
  CHECK(step.modules_after.at("M").depth() == 1);
  CHECK(step.modules_after.at("N").depth() == 1);
  CHECK(step.modules_after.at("R").depth() == 1);
  CHECK(step.modules_after.at("MtensorN").depth() == 1);

  ReductionStep again = reduce_pair(r, r, 0);
  CHECK(again.element == step.element);  // deterministic for a fixed seed
}

TEST_CASE("reduce_pair on a mixed-depth pair over three variables") {
  auto s = poly3();
  // First syzygy of k is the maximal ideal; direct sum with a free rank one.
  FPModule omega = syzygy_module(residue_field(s), 1);
  FPModule m = direct_sum(omega, ring_as_module(s));
  FPModule n = ring_as_module(s);
  CHECK(m.depth() == 1);
  CHECK(n.depth() == 3);
  ReductionStep step = reduce_pair(m, n, 3);
  CHECK(step.modules_after.at("M").depth() == 0);
  CHECK(step.modules_after.at("N").depth() == 2);
  CHECK(step.modules_after.at("R").depth() == 2);
}

TEST_CASE("reduce_pair rejects a depth-zero tensor product") {
  auto s = poly2();
  FPModule m = cyclic(s, "x");
  FPModule n = cyclic(s, "y");
  CHECK_THROWS_AS(reduce_pair(m, n, 0), PreconditionError);
  try {
    reduce_pair(m, n, 0);
  } catch (const PreconditionError& e) {
    CHECK(e.failing_depth == 0);
  }
}

TEST_CASE("reduce_pair rejects a Tor-dependent pair") {
  auto r = hypersurface_xy();
  FPModule m = cyclic(r, "x");
  CHECK_THROWS_AS(reduce_pair(m, m, 0), PreconditionError);
}

TEST_CASE("descend_to_depth_one over three free variables takes two steps") {
  auto s = poly3();
  FPModule r = ring_as_module(s);
  auto steps = descend_to_depth_one(r, r, 0);
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].ring_before == s);
  CHECK(steps[0].ring_after == steps[1].ring_before);
  CHECK(ring_as_module(steps[1].ring_after).depth() == 1);
}

TEST_CASE("descend_to_depth_one returns no steps at depth one") {
  auto s = Ring::polynomial_ring(32003, {"x"});
  FPModule r = ring_as_module(s);
  CHECK(descend_to_depth_one(r, r, 0).empty());
}

TEST_CASE("descend_to_depth_one on the quadric cone matrix factorization") {
  auto r = quadric3();
  FPModule m = mf_module(r);
  FPModule n = ring_as_module(r);
  CHECK(m.depth() == 2);
  auto steps = descend_to_depth_one(m, n, 0);
  REQUIRE(steps.size() == 1);
  CHECK(ring_as_module(steps[0].ring_after).depth() == 1);
  CHECK(steps[0].modules_after.at("M").depth() == 1);
}

TEST_CASE("descend_to_depth_one enforces its hypotheses") {
  auto s = poly2();
  // Not maximal Cohen-Macaulay: depth k = 0 < depth S.
  CHECK_THROWS_AS(descend_to_depth_one(residue_field(s), ring_as_module(s), 0),
                  PreconditionError);
  // Not a Cohen-Macaulay ring: depth 0 < dimension 1.
  auto bad = Ring::quotient_ring(32003, {"x", "y"},
                                 {s->parse("x*x"), s->parse("x*y")});
  CHECK_THROWS_AS(
      descend_to_depth_one(ring_as_module(bad), ring_as_module(bad), 0),
      PreconditionError);
}

TEST_CASE("long exact sequence check holds for a free second argument") {
  auto s = poly2();
  FPModule n = free_fp(s, {0, 1});
  FPModule m = cyclic(s, "x");
  SeqVerdict v = les_check_spect(n, m, s->parse("y"), 3);
  CHECK(v.outcome == Outcome::Holds);
}

TEST_CASE("long exact sequence check on the coordinate-axis pair") {
  auto s = poly2();
  FPModule n = cyclic(s, "y");
  FPModule m = cyclic(s, "x");
  SeqVerdict v = les_check_spect(n, m, s->parse("y"), 3);
  CHECK(v.outcome == Outcome::Holds);
}

TEST_CASE("long exact sequence check with a nonzero torsion term") {
  auto s = poly2();
  // N = k has x-torsion, so Tor_1(N, S/(x)) enters the sequence.
  FPModule n = residue_field(s);
  FPModule m = ring_as_module(s);
  SeqVerdict v = les_check_spect(n, m, s->parse("x"), 3);
  CHECK(v.outcome == Outcome::Holds);

  FPModule m2 = cyclic(s, "y");
  SeqVerdict v2 = les_check_spect(n, m2, s->parse("x"), 3);
  CHECK(v2.outcome == Outcome::Holds);
}

TEST_CASE("long exact sequence check over the hypersurface") {
  auto r = hypersurface_xy();
  FPModule n = cyclic(r, "x");
  FPModule m = cyclic(r, "y");
  SeqVerdict v = les_check_spect(n, m, r->parse("x+y"), 3);
  CHECK(v.outcome == Outcome::Holds);
  SeqVerdict v2 = les_check_spect(n, n, r->parse("x+y"), 3);
  CHECK(v2.outcome == Outcome::Holds);
}

TEST_CASE("long exact sequence check validates its element") {
  auto r = hypersurface_xy();
  FPModule n = cyclic(r, "x");
  // x is a zerodivisor on the hypersurface.
  CHECK_THROWS_AS(les_check_spect(n, n, r->parse("x"), 3), InputError);
  CHECK_THROWS_AS(les_check_spect(n, n, r->parse("0"), 3), InputError);
  CHECK_THROWS_AS(les_check_spect(n, n, r->parse("x+y*y"), 3), InputError);
  auto s = poly2();
  CHECK_THROWS_AS(
      les_check_spect(zero_fp(s), ring_as_module(s), s->parse("x"), 3),
      InputError);
}

TEST_CASE("four-term sequence check with a fully Tor-independent triple") {
  auto s = poly3();
  FPModule m = cyclic(s, "x");
  FPModule n = cyclic(s, "y");
  SeqVerdict v = cor_spect_check(n, m, s->parse("z"), 4);
  CHECK(v.outcome == Outcome::Holds);
}

TEST_CASE("four-term sequence check with torsion after reduction") {
  auto s = poly3();
  FPModule n = cyclic(s, "z*z");
  FPModule m = cyclic(s, "x");
  // z is regular on S and on M but kills part of N after reduction.
  SeqVerdict v = cor_spect_check(n, m, s->parse("z"), 4);
  CHECK(v.outcome == Outcome::Holds);
}

TEST_CASE("four-term sequence check enforces its preconditions") {
  auto s = poly3();
  FPModule m = cyclic(s, "x");
  FPModule n = cyclic(s, "y");
  // Element not regular on M.
  CHECK_THROWS_AS(cor_spect_check(n, m, s->parse("x"), 4), InputError);
  // Tor-dependent pair.
  auto r = hypersurface_xy();
  FPModule rm = cyclic(r, "x");
  CHECK_THROWS_AS(cor_spect_check(rm, rm, r->parse("x+y"), 4), InputError);
}
