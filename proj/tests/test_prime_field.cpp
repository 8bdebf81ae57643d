#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "depthlab/prime_field.hpp"

using namespace depthlab;

TEST_CASE("inverse in F_5") {
  PrimeField F(5);
  CHECK(F.inverse(2) == 3);
  CHECK(F.inverse(1) == 1);
  CHECK(F.inverse(4) == 4);
  CHECK_THROWS_AS(F.inverse(0), DivisionByZero);
}

TEST_CASE("composite characteristic is rejected") {
  CHECK_THROWS_AS(PrimeField(4), InputError);
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_THROWS_AS(PrimeField(0), InputError);
  CHECK_THROWS_AS(PrimeField(32001), InputError);  // 3 * 10667
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(32003));
}

TEST_CASE("from_int reduces into canonical range") {
  PrimeField F(7);
  CHECK(F.from_int(0) == 0);
  CHECK(F.from_int(13) == 6);
  CHECK(F.from_int(-1) == 6);
  CHECK(F.from_int(-15) == 6);
  CHECK(F.from_int(7) == 0);
}

TEST_CASE("field axioms on sampled elements") {
  for (std::uint32_t p : {2u, 5u, 32003u}) {
    PrimeField F(p);
    std::vector<PrimeField::Elem> sample;
    for (std::uint32_t k = 0; k < 25; ++k) sample.push_back((k * k + 3 * k + 1) % p);
    for (auto a : sample) {
      CHECK(F.add(a, F.neg(a)) == 0);
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      if (a != 0) {
        CHECK(F.mul(a, F.inverse(a)) == 1);
        CHECK(F.div(a, a) == 1);
      }
      for (auto b : sample) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.sub(a, b) == F.add(a, F.neg(b)));
        for (auto c : sample) {
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("arithmetic near the modulus does not overflow") {
  PrimeField F(32003);
  PrimeField::Elem big = 32002;
  CHECK(F.add(big, big) == 32001);
  CHECK(F.mul(big, big) == 1);  // (-1)^2
  CHECK(F.inverse(big) == big);
}
