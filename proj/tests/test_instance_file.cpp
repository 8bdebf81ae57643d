// Tests for the instance-file format: parsing with positioned errors,
// homogeneity enforcement naming the offending block, and the canonical
// round-trip guarantee parse -> serialize -> parse.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "depthlab/errors.hpp"
#include "depthlab/instance_file.hpp"
#include "depthlab/poly_text.hpp"

using namespace depthlab;

namespace {

const char* kK1File = R"(# two coordinate hyperplanes over the plane
ring {
  char 32003
  vars x y
}

module M {
  twists 0
  relation x
}

module N {
  twists 0
  relation y
}

pair M N

options {
  bound 6
  seed 5
}
)";

std::string presentation_string(const FPModule& m) {
  const auto& vars = m.ring()->var_names();
  std::string out = "twists:";
  for (int t : m.cover().twists) out += " " + std::to_string(t);
  for (const Vec& row : m.relations()) {
    out += " | ";
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ", ";
      out += poly_to_string(row[i], vars);
    }
  }
  return out;
}

bool same_file(const InstanceFile& a, const InstanceFile& b) {
  if (a.modules.size() != b.modules.size()) return false;
  for (std::size_t i = 0; i < a.modules.size(); ++i) {
    if (a.modules[i].first != b.modules[i].first) return false;
    if (presentation_string(a.modules[i].second) !=
        presentation_string(b.modules[i].second))
      return false;
  }
  if (a.pairs != b.pairs) return false;
  if (a.options.bound != b.options.bound) return false;
  if (a.options.d_max != b.options.d_max) return false;
  if (a.options.seed != b.options.seed) return false;
  if (a.options.max_degree != b.options.max_degree) return false;
  if (a.families.size() != b.families.size()) return false;
  for (std::size_t i = 0; i < a.families.size(); ++i) {
    const auto& fa = a.families[i];
    const auto& fb = b.families[i];
    if (fa.name != fb.name || fa.count != fb.count || fa.seed != fb.seed ||
        fa.gens != fb.gens || fa.rels != fb.rels || fa.max_deg != fb.max_deg ||
        fa.positive_depth != fb.positive_depth ||
        fa.use_known_examples != fb.use_known_examples)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("minimal file parses to the expected pair of cyclic modules") {
  InstanceFile f = parse_instance_file(kK1File);
  REQUIRE(f.ring != nullptr);
  CHECK(f.ring->field().characteristic() == 32003);
  CHECK(f.ring->nvars() == 2);
  CHECK(f.ring->relations().empty());
  REQUIRE(f.modules.size() == 2);
  CHECK(f.modules[0].first == "M");
  CHECK(f.modules[1].first == "N");
  const FPModule* m = f.find_module("M");
  REQUIRE(m != nullptr);
  CHECK(m->cover().rank() == 1);
  REQUIRE(m->relations().size() == 1);
  CHECK(poly_to_string(m->relations()[0][0], f.ring->var_names()) == "x");
  CHECK(f.find_module("Q") == nullptr);
  REQUIRE(f.pairs.size() == 1);
  CHECK(f.pairs[0].first == "M");
  CHECK(f.pairs[0].second == "N");
  CHECK(f.options.bound == 6);
  CHECK(f.options.seed == 5);
  CHECK_FALSE(f.options.d_max.has_value());
  CHECK_FALSE(f.options.max_degree.has_value());
}

TEST_CASE("quotient rings, multirow modules and families parse") {
  const char* text = R"(ring {
  char 32003
  vars x y z
  relations x*y, z^2
}
module M {
  twists 0 1
  relation x^2, y
  relation z, 0
}
family f1 {
  count 4
  seed 9
  gens 3
  rels 2
  max_deg 1
  positive_depth false
  known false
}
)";
  InstanceFile f = parse_instance_file(text);
  CHECK(f.ring->relations().size() == 2);
  const FPModule* m = f.find_module("M");
  REQUIRE(m != nullptr);
  CHECK(m->cover().twists == std::vector<int>{0, 1});
  CHECK(m->relations().size() == 2);
  REQUIRE(f.families.size() == 1);
  CHECK(f.families[0].name == "f1");
  CHECK(f.families[0].count == 4);
  CHECK(f.families[0].seed == 9);
  CHECK(f.families[0].gens == 3);
  CHECK(f.families[0].rels == 2);
  CHECK(f.families[0].max_deg == 1);
  CHECK_FALSE(f.families[0].positive_depth);
  CHECK_FALSE(f.families[0].use_known_examples);
  CHECK(f.families[0].ring == f.ring);
}

TEST_CASE("empty file is rejected with the advertised message") {
  try {
    parse_instance_file("");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("missing ring block") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_instance_file("# only a comment\n"), ParseError);
}

TEST_CASE("syntax errors carry line and column positions") {
  const char* bad = R"(ring {
  char 32003
  vars x y
}
module M {
  twists 0
  relation x + @
}
)";
  try {
    parse_instance_file(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 7);
    CHECK(e.column > 10);
  }
}

TEST_CASE("structural mistakes are positioned parse errors") {
  CHECK_THROWS_AS(parse_instance_file("module M {\n}\n"), ParseError);
  CHECK_THROWS_AS(parse_instance_file("ring {\n  vars x\n}\n"), ParseError);
  CHECK_THROWS_AS(parse_instance_file("ring {\n  char 32003\n}\n"), ParseError);
  CHECK_THROWS_AS(parse_instance_file("ring {\n  char 32003\n  vars x\n"),
                  ParseError);  // unterminated block
  CHECK_THROWS_AS(
      parse_instance_file("ring {\n  char 32003\n  vars x\n}\nbogus\n"),
      ParseError);
  CHECK_THROWS_AS(
      parse_instance_file(
          "ring {\n  char 32003\n  vars x\n}\npair M N\n"),
      ParseError);  // pair names nothing
  // char must be a prime.
  CHECK_THROWS_AS(
      parse_instance_file("ring {\n  char 32004\n  vars x\n}\n"), ParseError);
  // duplicate module name
  const char* dup =
      "ring {\n  char 32003\n  vars x\n}\n"
      "module M {\n  twists 0\n}\nmodule M {\n  twists 0\n}\n";
  CHECK_THROWS_AS(parse_instance_file(dup), ParseError);
  // relation row width disagrees with the twists line
  const char* wide =
      "ring {\n  char 32003\n  vars x\n}\n"
      "module M {\n  twists 0\n  relation x, x\n}\n";
  CHECK_THROWS_AS(parse_instance_file(wide), ParseError);
}

TEST_CASE("inhomogeneous entries raise GradingError naming the block") {
  const char* bad_module = R"(ring {
  char 32003
  vars x y
}
module Mixed {
  twists 0
  relation x + y^2
}
)";
  try {
    parse_instance_file(bad_module);
    FAIL("expected GradingError");
  } catch (const GradingError& e) {
    CHECK(std::string(e.what()).find("Mixed") != std::string::npos);
  }

  const char* bad_ring = R"(ring {
  char 32003
  vars x y
  relations x + y^2
}
)";
  try {
    parse_instance_file(bad_ring);
    FAIL("expected GradingError");
  } catch (const GradingError& e) {
    CHECK(std::string(e.what()).find("ring block") != std::string::npos);
  }
}

TEST_CASE("round trip parse -> serialize -> parse is the identity") {
  const char* text = R"(ring {
  char 32003
  vars x y z
  relations x^2 + y^2 + z^2
}
module M {
  twists 0 0 0 0
  relation x, y, z, 0
  relation 31*y, x, 0, z
}
module N {
  twists 1
  relation x*z + 2*y^2
}
pair M N
pair N N
options {
  bound 8
  d_max 10
  seed 3
  max_degree 2
}
family g {
  count 2
  seed 77
  gens 2
  rels 3
  max_deg 2
  positive_depth true
  known false
}
)";
  InstanceFile f1 = parse_instance_file(text);
  std::string s1 = serialize_instance_file(f1);
  InstanceFile f2 = parse_instance_file(s1);
  CHECK(same_file(f1, f2));
  // serialize is a fixed point on its own output
  CHECK(serialize_instance_file(f2) == s1);
}

TEST_CASE("serialization prints normal forms over the quotient ring") {
  const char* text = R"(ring {
  char 32003
  vars x y
  relations x*y
}
module M {
  twists 0
  relation x*y + x^2
}
)";
  InstanceFile f = parse_instance_file(text);
  const FPModule* m = f.find_module("M");
  REQUIRE(m != nullptr);
  // x*y reduces to zero in the quotient, so only x^2 survives.
  CHECK(poly_to_string(m->relations()[0][0], f.ring->var_names()) == "x^2");
  std::string s = serialize_instance_file(f);
  CHECK(s.find("x^2") != std::string::npos);
  CHECK(same_file(f, parse_instance_file(s)));
}

TEST_CASE("options validate their ranges") {
  const char* neg =
      "ring {\n  char 32003\n  vars x\n}\noptions {\n  bound -1\n}\n";
  CHECK_THROWS_AS(parse_instance_file(neg), ParseError);
  const char* zero_deg =
      "ring {\n  char 32003\n  vars x\n}\noptions {\n  max_degree 0\n}\n";
  CHECK_THROWS_AS(parse_instance_file(zero_deg), ParseError);
  const char* dup =
      "ring {\n  char 32003\n  vars x\n}\noptions {\n  seed 1\n  seed 2\n}\n";
  CHECK_THROWS_AS(parse_instance_file(dup), ParseError);
  const char* unknown =
      "ring {\n  char 32003\n  vars x\n}\noptions {\n  fuel 9\n}\n";
  CHECK_THROWS_AS(parse_instance_file(unknown), ParseError);
}

TEST_CASE("known-example family round-trips through the file format") {
  InstanceFile f;
  f.ring = Ring::polynomial_ring(32003, {"x", "y"});
  InstanceFamily fam;
  fam.name = "fixtures";
  fam.use_known_examples = true;
  f.families.push_back(fam);
  InstanceFile g = parse_instance_file(serialize_instance_file(f));
  REQUIRE(g.families.size() == 1);
  CHECK(g.families[0].use_known_examples);
}
