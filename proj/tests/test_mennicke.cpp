#include "doctest.h"
#include "hw/mennicke.hpp"
#include "hw/parse.hpp"

using namespace hw;

namespace {
const Field rat = Field::f2_rational();
const Field gf4 = Field::gf2n(2, 0b111);
const Presentation& R = Presentation::get(PresId::R);

RingElem el(const std::string& s) { return parse_element(R, rat, s); }
}  // namespace

TEST_CASE("symbol construction checks its completion") {
  RingElem one = RingElem::one(R, rat);
  RingElem y = el("y");
  Mat good = Mat::from_rows(R, rat, {{one, y}, {RingElem::zero(R, rat), one}});
  CHECK_NOTHROW(MennickeSymbol(one, y, good));
  Mat bad = Mat::from_rows(R, rat, {{one, y}, {y, one}});
  CHECK_THROWS_AS(MennickeSymbol(one, y, bad), Error);  // det != 1
  CHECK_THROWS_AS(MennickeSymbol(y, one, good), Error); // wrong first row
}

TEST_CASE("symbol_shift moves the first entry") {
  // [1+(1+u)a^2, y] with t = (1+u)x lands on [1, y] (a^2 = xy in R)
  RingElem f = el("1+(1+u)*a^2");
  RingElem t = el("(1+u)*x");
  // completion of [f, y]: shift the obvious completion of [1, y]
  Mat base = Mat::from_rows(R, rat, {{RingElem::one(R, rat), el("y")},
                                     {RingElem::zero(R, rat), RingElem::one(R, rat)}});
  Mat completion = base * Mat::elementary(R, rat, 2, 2, 1, t);
  MennickeSymbol sym(f, el("y"), completion);
  auto [shifted, witness] = symbol_shift(sym, ShiftSlot::First, t);
  CHECK(shifted.a.is_one());
  CHECK(shifted.b == el("y"));
  CHECK(witness.left.empty());
  CHECK(witness.right.size() == 1);
  // zero shift: unchanged, empty witness
  auto [same, empty_w] = symbol_shift(sym, ShiftSlot::First, RingElem::zero(R, rat));
  CHECK(same.a == sym.a);
  CHECK(empty_w.right.empty());
}

TEST_CASE("shifting by t then t again returns the original (char 2)") {
  RingElem one = RingElem::one(R, rat);
  Mat comp = Mat::from_rows(R, rat, {{one, el("y")}, {RingElem::zero(R, rat), one}});
  MennickeSymbol sym(one, el("y"), comp);
  for (const std::string& expr : {"a", "x+a*y", "(1+u)*x"}) {
    auto [once, w1] = symbol_shift(sym, ShiftSlot::First, el(expr));
    auto [twice, w2] = symbol_shift(once, ShiftSlot::First, el(expr));
    CHECK(twice.a == sym.a);
    CHECK(twice.b == sym.b);
    CHECK(twice.completion == sym.completion);
  }
}

TEST_CASE("second-slot shift") {
  RingElem one = RingElem::one(R, rat);
  Mat comp = Mat::from_rows(R, rat, {{one, el("y")}, {RingElem::zero(R, rat), one}});
  MennickeSymbol sym(one, el("y"), comp);
  auto [shifted, w] = symbol_shift(sym, ShiftSlot::Second, el("a"));
  CHECK(shifted.b == el("y+a"));
  CHECK(shifted.completion.det().is_one());
}

TEST_CASE("the chain's shift identities hold in R") {
  CHECK(el("1+(1+u)*a^2+(1+u)*(1+a^2)") == el("u"));
  CHECK(el("(1+u)*(1+a)^2") == el("(1+u)*(1+a^2)"));
}

TEST_CASE("unit certificates") {
  FieldElem u = FieldElem::gen(rat);
  RingElem one = RingElem::one(R, rat);
  // [u, 1+a] with completion (u, 1+a; 0, 1/u)
  Mat comp = Mat::from_rows(R, rat, {{one * u, el("1+a")},
                                     {RingElem::zero(R, rat), one * u.inv()}});
  MennickeSymbol sym(one * u, el("1+a"), comp);
  ElementaryCertificate cert = symbol_unit_certificate(sym);
  CHECK(cert.verify());
  CHECK(cert.product() == diag3(comp));

  // [1, g]: short certificate
  Mat comp1 = Mat::from_rows(R, rat, {{one, el("y")}, {RingElem::zero(R, rat), one}});
  ElementaryCertificate cert1 = symbol_unit_certificate(MennickeSymbol(one, el("y"), comp1));
  CHECK(cert1.verify());
  CHECK(cert1.factors.size() <= 2);

  // [1+a, y]: neither entry is a unit of R
  Mat comp2 = Mat::from_rows(R, rat, {{el("1+a"), el("y")}, {el("x"), el("1+a")}});
  REQUIRE(comp2.det().is_one());  // (1+a)^2 + xy = 1+a^2+xy = 1 wait: check below
  CHECK_THROWS_AS(symbol_unit_certificate(MennickeSymbol(el("1+a"), el("y"), comp2)), Error);
}

TEST_CASE("completion_shift") {
  Mat m0 = build_m0(rat, FieldElem::gen(rat));
  CHECK(completion_shift(m0, m0).empty());
  RingElem f = el("x+a*y");
  Mat moved = Mat::elementary(R, rat, 2, 2, 1, f) * m0;
  auto L = completion_shift(m0, moved);
  REQUIRE(L.size() == 1);
  CHECK(L[0].r == f);
  CHECK(product_of(R, rat, 2, L) * m0 == moved);
  Mat other = build_m0(rat, FieldElem::gen(rat) + FieldElem::one(rat));
  CHECK_THROWS_AS(completion_shift(m0, other), Error);  // first rows differ
}

TEST_CASE("multiplicativity combinator") {
  FieldElem u = FieldElem::gen(rat);
  RingElem one = RingElem::one(R, rat);
  // [u, 1+a] and [u, y] share the unit first entry; combine to [u, (1+a)y].
  Mat ca = Mat::from_rows(R, rat, {{one * u, el("1+a")},
                                   {RingElem::zero(R, rat), one * u.inv()}});
  SymbolCert s1{MennickeSymbol(one * u, el("1+a"), ca), {}};
  s1.cert = symbol_unit_certificate(s1.sym);
  Mat cb = Mat::from_rows(R, rat, {{one * u, el("y")},
                                   {RingElem::zero(R, rat), one * u.inv()}});
  SymbolCert s2{MennickeSymbol(one * u, el("y"), cb), {}};
  s2.cert = symbol_unit_certificate(s2.sym);
  SymbolCert prod = symbol_mult_second(s1, s2);
  CHECK(prod.sym.a == one * u);
  CHECK(prod.sym.b == el("(1+a)*y"));
  CHECK(prod.cert.verify());

  // mismatched first entries are rejected
  Mat cc = Mat::from_rows(R, rat, {{one, el("y")}, {RingElem::zero(R, rat), one}});
  SymbolCert s3{MennickeSymbol(one, el("y"), cc), {}};
  s3.cert = symbol_unit_certificate(s3.sym);
  CHECK_THROWS_AS(symbol_mult_second(s1, s3), Error);

  // unit second factor: [f,1][f,g] = [f,g]
  Mat cu = Mat::from_rows(R, rat, {{one * u, one}, {RingElem::zero(R, rat), one * u.inv()}});
  SymbolCert su{MennickeSymbol(one * u, one, cu), {}};
  su.cert = symbol_unit_certificate(su.sym);
  SymbolCert prod2 = symbol_mult_second(su, s1);
  CHECK(prod2.sym.b == el("1+a"));
  CHECK(prod2.cert.verify());
}

TEST_CASE("the full chain certifies diag(M0(u), 1)") {
  for (auto [field, uexpr] :
       {std::pair{rat, "u"}, std::pair{rat, "u+1"}, std::pair{gf4, "w"}}) {
    FieldElem u = parse_scalar(field, uexpr);
    ChainResult res = run_lemma21_chain(field, u);
    CHECK(res.ok());
    CHECK(res.cert.verify());
    CHECK(res.cert.target == diag3(build_m0(field, u)));
    CHECK(res.cert.factors.size() > 0);
    for (const auto& step : res.steps) {
      INFO(step.name);
      CHECK(step.ok);
    }
  }
}
