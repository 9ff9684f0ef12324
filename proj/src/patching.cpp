#include "hw/patching.hpp"

namespace hw {

MilnorSquare MilnorSquare::build(const Field& f) {
  StandardHoms homs = StandardHoms::build(f);
  return MilnorSquare{homs.ev0, homs.ev1, homs.pi_R};
}

bool MilnorSquare::check() const {
  // Well-definedness of ev0/ev1 was machine-checked at construction; the
  // square commutes when pi.ev0 = pi.ev1 on generators.
  return agree_on_generators(RingHom::compose(pi, ev0), RingHom::compose(pi, ev1));
}

RingElem pair_section(const RingElem& f, const RingElem& g) {
  const Presentation& AXY = Presentation::get(PresId::PolyAXY);
  if (!same_presentation(f.pres(), AXY) || !same_presentation(g.pres(), AXY))
    fail(Err::BadParameter, "pair_section expects elements of k[a,x,y]");
  const Field& k = f.field();
  RingElem relator = RingElem::generator(AXY, k, "a").pow(2) +
                     RingElem::generator(AXY, k, "x") * RingElem::generator(AXY, k, "y");
  RingElem rem;
  auto q = try_divide_exact(g + f, relator, &rem);
  if (!q)
    fail(Err::NotInPullback,
         "g - f is not divisible by a^2+xy; remainder " + rem.str());

  const Presentation& RP = Presentation::get(PresId::RP);
  auto embed = [&](const RingElem& e) {
    TermMap terms = e.terms();  // same generator indices a,x,y; t is fresh
    return RingElem::from_terms(RP, k, std::move(terms));
  };
  RingElem section = embed(f) + RingElem::generator(RP, k, "t") * embed(*q);

  StandardHoms homs = StandardHoms::build(k);
  if (!(homs.ev0(section) == f) || !(homs.ev1(section) == g))
    fail(Err::WitnessFailed, "pair_section round trip failed");
  return section;
}

LiftResult lift_certificate(const ElementaryCertificate& cert) {
  const Presentation& R = Presentation::get(PresId::R);
  const Presentation& AXY = Presentation::get(PresId::PolyAXY);
  if (!same_presentation(cert.target.pres(), R))
    fail(Err::BadParameter, "certificate must live over R");
  if (!cert.verify()) fail(Err::LiftVerifyFailed, "input certificate does not verify over R");
  const Field& f = cert.target.field();
  int n = cert.target.rows();

  // Normal forms of R have deg_a <= 1 and reread verbatim as polynomials.
  auto lift = [&](const RingElem& r) { return RingElem::from_terms(AXY, f, r.terms()); };

  std::vector<ElemFactor> lifted, lifted_inv;
  for (const ElemFactor& fac : cert.factors) lifted.push_back({fac.i, fac.j, lift(fac.r)});
  for (auto it = lifted.rbegin(); it != lifted.rend(); ++it)
    lifted_inv.push_back({it->i, it->j, it->r.neg()});

  LiftResult out;
  out.e = product_of(AXY, f, n, lifted);
  out.einv = product_of(AXY, f, n, lifted_inv);

  StandardHoms homs = StandardHoms::build(f);
  if (!(out.e.map(homs.pi_R) == cert.target))
    fail(Err::LiftVerifyFailed, "pi(E) differs from the certificate target");
  if (!out.e.det().is_one()) fail(Err::LiftVerifyFailed, "det(E) != 1");
  if (!(out.e * out.einv).is_identity()) fail(Err::LiftVerifyFailed, "E * E^-1 != I");
  return out;
}

FreenessWitness freeness_witness(const LiftResult& lift, const Mat& n_over_r) {
  const Presentation& AXY = Presentation::get(PresId::PolyAXY);
  const Field& f = lift.e.field();
  StandardHoms homs = StandardHoms::build(f);
  FreenessWitness w;
  w.e = lift.e;
  w.einv = lift.einv;

  if (!(lift.e * lift.einv).is_identity()) fail(Err::WitnessFailed, "E E^-1 != I");
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      RingElem p = i == j ? RingElem::one(AXY, f) : RingElem::zero(AXY, f);
      RingElem q = lift.e.at(j, i);  // coordinate j of E e_i
      w.basis[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = {p, q};
    }
    // twisted pullback agreement: N pi(e_i) = pi(E e_i)
    Mat ei = Mat::zero(AXY, f, 3, 1);
    ei.set(i, 1, RingElem::one(AXY, f));
    Mat lhs = n_over_r * ei.map(homs.pi_R);
    Mat rhs = (lift.e * ei).map(homs.pi_R);
    if (!(lhs == rhs)) fail(Err::WitnessFailed, "basis vector fails the pullback agreement");
    // backward map returns the standard basis exactly
    if (!(lift.einv * (lift.e * ei) == ei))
      fail(Err::WitnessFailed, "backward map does not invert the forward map");
  }
  w.verified = true;
  return w;
}

bool p_membership(const std::array<RingElem, 2>& p, const std::array<RingElem, 2>& q,
                  const Field& f, const FieldElem& u) {
  const Presentation& AXY = Presentation::get(PresId::PolyAXY);
  StandardHoms homs = StandardHoms::build(f);
  Mat pv = Mat::column(AXY, f, {p[0], p[1]});
  Mat qv = Mat::column(AXY, f, {q[0], q[1]});
  return build_m(f, u) * pv.map(homs.pi_R) == qv.map(homs.pi_R);
}

HExtensionReport h_extension_checks(const Field& f) {
  const Presentation& RP = Presentation::get(PresId::RP);
  StandardHoms homs = StandardHoms::build(f);
  HExtensionReport rep;

  // grading: every monomial of t^2 + t(a^2+xy) has weight 4 under
  // |t| = 2, |a| = |x| = |y| = 1, so h(relator) = s^4 * relator.
  rep.relator_homogeneous = true;
  for (const auto& relator : RP.relators())
    for (const Monomial& m : relator)
      rep.relator_homogeneous = rep.relator_homogeneous && RP.weighted_degree(m) == 4;

  rep.section_identity =
      agree_on_generators(RingHom::compose(homs.ev_s1, homs.h), RingHom::identity(RP, f));

  RingHom collapse = RingHom::compose(homs.ev_s0, homs.h);
  rep.section_constants = true;
  for (const RingElem& im : collapse.images())
    rep.section_constants = rep.section_constants && im.is_constant();
  return rep;
}

}  // namespace hw
