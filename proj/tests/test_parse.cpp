#include "doctest.h"
#include "hw/parse.hpp"

using namespace hw;

namespace {
const Field rat = Field::f2_rational();
}

TEST_CASE("field specs") {
  CHECK(parse_field_spec("f2-rational") == rat);
  CHECK(parse_field_spec("gf2:2:111") == Field::gf2n(2, 0b111));
  CHECK(parse_field_spec("gf2:3:1011") == Field::gf2n(3, 0b1011));
  CHECK_THROWS_AS(parse_field_spec("gf2:2:101"), Error);  // reducible
  CHECK_THROWS_AS(parse_field_spec("q7"), Error);
}

TEST_CASE("ring element expressions") {
  const Presentation& R = Presentation::get(PresId::R);
  RingElem a = RingElem::generator(R, rat, "a");
  RingElem x = RingElem::generator(R, rat, "x");
  RingElem y = RingElem::generator(R, rat, "y");
  RingElem one = RingElem::one(R, rat);
  FieldElem u = FieldElem::gen(rat);

  CHECK(parse_element(R, rat, "a^2") == x * y);
  CHECK(parse_element(R, rat, "1+(1+u)*a^2") == one + x * y * (FieldElem::one(rat) + u));
  CHECK(parse_element(R, rat, " x * y + x*y ") .is_zero());
  CHECK(parse_element(R, rat, "(1+a)^2") == one + x * y);
  CHECK(parse_element(R, rat, "3*x") == x);  // integers mod 2
  CHECK(parse_element(R, rat, "u/u").is_one());
}

TEST_CASE("scalar expressions") {
  FieldElem u = FieldElem::gen(rat);
  CHECK(parse_scalar(rat, "u^2+1") == u * u + FieldElem::one(rat));
  CHECK(parse_scalar(rat, "1/u") == u.inv());
  CHECK(parse_scalar(rat, "(1+u)/(u^3+u)") ==
        (FieldElem::one(rat) + u) * (u.pow(3) + u).inv());
  Field gf4 = Field::gf2n(2, 0b111);
  CHECK(parse_scalar(gf4, "w") == FieldElem::gen(gf4));
  CHECK(parse_scalar(gf4, "w^2+w+1").is_zero());
  CHECK(parse_scalar(gf4, "u") == FieldElem::gen(gf4));  // u is an alias
}

TEST_CASE("parse errors carry positions") {
  const Presentation& R = Presentation::get(PresId::R);
  CHECK_THROWS_WITH_AS(parse_element(R, rat, "a+q"), doctest::Contains("position 2"), Error);
  CHECK_THROWS_AS(parse_element(R, rat, "a+"), Error);
  CHECK_THROWS_AS(parse_element(R, rat, "(a"), Error);
  CHECK_THROWS_AS(parse_element(R, rat, "1/x"), Error);  // x is not a unit
  CHECK_THROWS_AS(parse_element(R, rat, "s"), Error);    // not a generator of R
}

TEST_CASE("round trip through the canonical printer") {
  const Presentation& R = Presentation::get(PresId::R);
  RingElem f = parse_element(R, rat, "1+(1+u)*a^2+(u/(1+u))*y");
  CHECK(parse_element(R, rat, f.str()) == f);
}
