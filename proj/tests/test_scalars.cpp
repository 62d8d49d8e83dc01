#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ffgs/scalars.hpp"

using namespace ffgs;

TEST_CASE("ring spec validates primality") {
  CHECK_NOTHROW(RingSpec(2));
  CHECK_NOTHROW(RingSpec(97));
  CHECK_THROWS_AS(RingSpec(1), ValidationError);
  CHECK_THROWS_AS(RingSpec(4), ValidationError);
  CHECK_THROWS_AS(RingSpec(0), ValidationError);
}

TEST_CASE("valuation") {
  RingSpec r3(3), r2(2);
  CHECK(valuation(Rat(9) / 2, r3) == Valuation::of(2));
  CHECK(valuation(Rat(0), r3).is_infinity());
  CHECK(valuation(Rat(0), r2).is_infinity());
  CHECK(valuation(Rat(3) / 4, r2) == Valuation::of(-2));
  CHECK(valuation(Rat(1), r2) == Valuation::of(0));
  // infinity is above every finite value
  CHECK(Valuation::infinity() > Valuation::of(1 << 20));
  CHECK(Valuation::of(-5) < Valuation::of(0));
}

TEST_CASE("ring membership") {
  RingSpec r2(2);
  CHECK(in_R(Rat(3) / 5, r2));
  CHECK(!in_R(Rat(1) / 2, r2));
  CHECK(in_R(Rat(0), r2));
  CHECK(in_base(Rat(1), Base::k, r2));
  CHECK(!in_base(Rat(2), Base::k, r2));
  CHECK(!in_base(Rat(1) / 3, Base::k, r2));
}

TEST_CASE("residue reduction") {
  RingSpec r3(3);
  CHECK(reduce_mod_p(Rat(7), r3) == Rat(1));
  CHECK(reduce_mod_p(Rat(1) / 2, r3) == Rat(2));  // 2^{-1} = 2 mod 3
  CHECK(reduce_mod_p(Rat(-1), r3) == Rat(2));
  CHECK_THROWS_AS(reduce_mod_p(Rat(1) / 3, r3), LocationError);
}

TEST_CASE("rational parsing is exact and strict") {
  CHECK(parse_rat("3/6") == Rat(1) / 2);
  CHECK(parse_rat("-4/2") == Rat(-2));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(rat_to_string(parse_rat("3/6")) == "1/2");
  CHECK(rat_to_string(Rat(-5)) == "-5");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat("a/b"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/"), ParseError);
}

TEST_CASE("scalar locations") {
  RingSpec r2(2);
  Scalar a = Scalar::in_ring(Rat(3), r2);
  Scalar b = Scalar::in_ring(Rat(1) / 3, r2);
  CHECK((a + b).loc() == Base::R);
  CHECK((a * b).loc() == Base::R);
  CHECK_THROWS_AS(Scalar::in_ring(Rat(1) / 2, r2), LocationError);
  Scalar half = Scalar::in_field(Rat(1) / 2);
  CHECK((a + half).loc() == Base::K);
  // division may leave R
  CHECK(div(a, Scalar::in_ring(Rat(2), r2), r2).loc() == Base::K);
  CHECK(div(a, Scalar::in_ring(Rat(3), r2), r2).loc() == Base::R);
  CHECK_THROWS_AS(div(a, Scalar::in_ring(Rat(0), r2), r2), ValidationError);
}
