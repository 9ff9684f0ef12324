#include "doctest.h"
#include "hw/field.hpp"

using namespace hw;

namespace {
const Field gf4 = Field::gf2n(2, 0b111);
const Field rat = Field::f2_rational();
}  // namespace

TEST_CASE("gf2 polynomial basics") {
  Gf2Poly p = Gf2Poly::from_bit_string("111");  // u^2+u+1
  CHECK(p.degree() == 2);
  CHECK(p.str() == "u^2+u+1");
  CHECK(p.is_irreducible());
  CHECK_FALSE(Gf2Poly::from_bit_string("101").is_irreducible());  // (u+1)^2
  Gf2Poly q = Gf2Poly::from_bits(0b11);
  CHECK((q * q) == Gf2Poly::from_bits(0b101));  // (u+1)^2 = u^2+1
  CHECK((p + p).is_zero());
  auto dm = (p * q).divmod(q);
  CHECK(dm.q == p);
  CHECK(dm.r.is_zero());
  CHECK(Gf2Poly::gcd(p * q, q) == q);
}

TEST_CASE("gf2 polynomial squares") {
  Gf2Poly sq = Gf2Poly::from_bits(0b101);  // u^2+1
  CHECK(sq.is_square());
  CHECK(sq.sqrt() == Gf2Poly::from_bits(0b11));
  CHECK_FALSE(Gf2Poly::gen().is_square());
}

TEST_CASE("GF(4) arithmetic") {
  FieldElem w = FieldElem::gen(gf4);
  FieldElem one = FieldElem::one(gf4);
  // w^2 = w+1, w^3 = 1
  CHECK(w * w == w + one);
  CHECK(w * w * w == one);
  CHECK(w.inv() == w * w);
  CHECK_THROWS_AS(FieldElem::zero(gf4).inv(), Error);
}

TEST_CASE("GF(4) elements are always squares") {
  FieldElem w = FieldElem::gen(gf4);
  auto r = w.sqrt();
  REQUIRE(r.has_value());
  CHECK(*r == w * w);
  CHECK(*r * *r == w);
}

TEST_CASE("F2(u) arithmetic") {
  FieldElem u = FieldElem::gen(rat);
  FieldElem one = FieldElem::one(rat);
  CHECK((u + u).is_zero());  // characteristic 2
  FieldElem inv = (one + u).inv();
  CHECK(inv * (one + u) == one);
  CHECK(inv.str() == "(1)/(u+1)");
}

TEST_CASE("F2(u) squares") {
  FieldElem u = FieldElem::gen(rat);
  FieldElem one = FieldElem::one(rat);
  CHECK_FALSE(u.is_square());
  FieldElem s = u * u + one;  // (u+1)^2
  auto r = s.sqrt();
  REQUIRE(r.has_value());
  CHECK(*r == u + one);
  FieldElem q = u * (one + u).inv();
  REQUIRE((q * q).sqrt().has_value());
  CHECK(*(q * q).sqrt() == q);
  CHECK_FALSE(q.is_square());
}

TEST_CASE("field mismatch is rejected") {
  CHECK_THROWS_AS(FieldElem::gen(gf4) + FieldElem::gen(rat), Error);
}

TEST_CASE("field descriptors") {
  CHECK(gf4.str() == "gf2:2:111");
  CHECK(rat.str() == "f2-rational");
  CHECK(gf4.size() == 4);
  CHECK_FALSE(rat.size().has_value());
  CHECK_THROWS_AS(Field::gf2n(2, 0b101), Error);  // reducible modulus
  CHECK_THROWS_AS(Field::gf2n(3, 0b111), Error);  // degree mismatch
}

TEST_CASE("GF(8) sanity") {
  Field gf8 = Field::gf2n(3, 0b1011);
  FieldElem w = FieldElem::gen(gf8);
  FieldElem acc = FieldElem::one(gf8);
  int order = 0;
  do {
    acc = acc * w;
    ++order;
  } while (!acc.is_one());
  CHECK(order == 7);
  for (std::uint64_t b = 0; b < 8; ++b) {
    FieldElem x = FieldElem::from_bits(gf8, b);
    auto r = x.sqrt();
    REQUIRE(r.has_value());
    CHECK(*r * *r == x);
  }
}
