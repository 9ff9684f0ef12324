#include "hw/hom.hpp"

namespace hw {

RingHom::RingHom(std::string name, const Presentation& src, const Presentation& dst,
                 std::vector<RingElem> images)
    : name_(std::move(name)), src_(&src), dst_(&dst), field_(Field::f2_rational()) {
  if (static_cast<int>(images.size()) != src.nvars())
    fail(Err::BadParameter, name_ + ": expected " + std::to_string(src.nvars()) + " images");
  for (const RingElem& im : images) {
    if (!im.valid() || !same_presentation(im.pres(), dst))
      fail(Err::PresentationMismatch, name_ + ": image not in " + dst.name());
  }
  if (!images.empty()) field_ = images.front().field();
  images_ = std::move(images);
  // Well-definedness: every relator must map to zero.
  for (std::size_t r = 0; r < src.relators().size(); ++r) {
    RingElem sum = RingElem::zero(dst, field_);
    for (const Monomial& m : src.relators()[r]) {
      RingElem prod = RingElem::one(dst, field_);
      for (int v = 0; v < src.nvars(); ++v)
        if (m.e[static_cast<std::size_t>(v)])
          prod = prod * images_[static_cast<std::size_t>(v)].pow(m.e[static_cast<std::size_t>(v)]);
      sum = sum + prod;
    }
    if (!sum.is_zero()) {
      RingElem rel = RingElem::zero(src, field_);
      for (const Monomial& m : src.relators()[r])
        rel = rel + RingElem::monomial(src, FieldElem::one(field_), m);
      fail(Err::IllDefinedHom,
           name_ + ": relator " + rel.str() + " maps to " + sum.str() + " != 0");
    }
  }
}

RingElem RingHom::operator()(const RingElem& f) const {
  if (!f.valid()) fail(Err::BadParameter, "detached element");
  if (!same_presentation(f.pres(), *src_))
    fail(Err::PresentationMismatch, name_ + " applied to an element of " + f.pres().name());
  RingElem out = RingElem::zero(*dst_, f.field());
  for (const auto& [m, c] : f.terms()) {
    RingElem prod = RingElem::scalar(*dst_, c);
    for (int v = 0; v < src_->nvars(); ++v)
      if (m.e[static_cast<std::size_t>(v)])
        prod = prod * images_[static_cast<std::size_t>(v)].pow(m.e[static_cast<std::size_t>(v)]);
    out = out + prod;
  }
  return out;
}

RingHom RingHom::compose(const RingHom& g, const RingHom& f) {
  if (!same_presentation(f.target(), g.source()))
    fail(Err::PresentationMismatch, "cannot compose " + g.name() + " after " + f.name());
  std::vector<RingElem> images;
  images.reserve(f.images().size());
  for (const RingElem& im : f.images()) images.push_back(g(im));
  return RingHom(g.name() + "." + f.name(), f.source(), g.target(), std::move(images));
}

RingHom RingHom::identity(const Presentation& p, const Field& f) {
  std::vector<RingElem> images;
  for (int v = 0; v < p.nvars(); ++v) images.push_back(RingElem::generator(p, f, v));
  return RingHom("id_" + p.name(), p, p, std::move(images));
}

bool agree_on_generators(const RingHom& f, const RingHom& g) {
  if (!same_presentation(f.source(), g.source()) || !same_presentation(f.target(), g.target()))
    return false;
  for (std::size_t i = 0; i < f.images().size(); ++i)
    if (!(f.images()[i] == g.images()[i])) return false;
  return true;
}

StandardHoms StandardHoms::build(const Field& f) {
  const Presentation& K = Presentation::get(PresId::K);
  const Presentation& ST = Presentation::get(PresId::PolyST);
  const Presentation& X = Presentation::get(PresId::PolyX);
  const Presentation& AXY = Presentation::get(PresId::PolyAXY);
  const Presentation& R = Presentation::get(PresId::R);
  const Presentation& A = Presentation::get(PresId::A);
  const Presentation& RP = Presentation::get(PresId::RP);
  const Presentation& RPS = Presentation::get(PresId::RPS);

  auto g = [&](const Presentation& p, std::string_view v) {
    return RingElem::generator(p, f, v);
  };

  RingHom psi("psi", R, ST, {g(ST, "s") * g(ST, "t"), g(ST, "t"), g(ST, "s").pow(2) * g(ST, "t")});
  RingHom pi_A("pi_A", ST, A, {g(A, "s"), g(A, "t")});
  RingHom pi_R("pi_R", AXY, R, {g(R, "a"), g(R, "x"), g(R, "y")});
  RingHom phi("phi", X, A, {g(A, "t")});
  RingHom zeta("zeta", A, A, {RingElem::zero(A, f), g(A, "t")});
  RingHom iota("iota", K, ST, {});
  RingHom iota_prime("iota_prime", K, R, {});
  RingHom factor_R_kx("factor_R_kx", R, X, {RingElem::zero(X, f), g(X, "x"), RingElem::zero(X, f)});
  RingHom ev0("ev0", RP, AXY,
              {g(AXY, "a"), g(AXY, "x"), g(AXY, "y"), RingElem::zero(AXY, f)});
  RingHom ev1("ev1", RP, AXY,
              {g(AXY, "a"), g(AXY, "x"), g(AXY, "y"),
               g(AXY, "a").pow(2) + g(AXY, "x") * g(AXY, "y")});
  // h multiplies a generator of weight d by s^d.
  RingHom h("h", RP, RPS,
            {g(RPS, "s") * g(RPS, "a"), g(RPS, "s") * g(RPS, "x"), g(RPS, "s") * g(RPS, "y"),
             g(RPS, "s").pow(2) * g(RPS, "t")});
  RingHom ev_s0("ev_s0", RPS, RP,
                {g(RP, "a"), g(RP, "x"), g(RP, "y"), g(RP, "t"), RingElem::zero(RP, f)});
  RingHom ev_s1("ev_s1", RPS, RP,
                {g(RP, "a"), g(RP, "x"), g(RP, "y"), g(RP, "t"), RingElem::one(RP, f)});

  return StandardHoms{std::move(psi),        std::move(pi_A), std::move(pi_R),
                      std::move(phi),        std::move(zeta), std::move(iota),
                      std::move(iota_prime), std::move(factor_R_kx),
                      std::move(ev0),        std::move(ev1),  std::move(h),
                      std::move(ev_s0),      std::move(ev_s1)};
}

std::vector<const RingHom*> StandardHoms::all() const {
  return {&psi, &pi_A, &pi_R,        &phi, &zeta, &iota, &iota_prime,
          &factor_R_kx, &ev0, &ev1, &h,   &ev_s0, &ev_s1};
}

std::vector<StandardHoms::IdentityCheck> StandardHoms::verify_identities() const {
  std::vector<IdentityCheck> out;
  const Field f = psi.field();
  const Presentation& ST = Presentation::get(PresId::PolyST);
  const Presentation& RP = Presentation::get(PresId::RP);

  // iota = psi . iota_prime (both are the k-inclusion into k[s,t]); with no
  // generators the check is agreement on a scalar.
  {
    RingHom lhs = RingHom::compose(psi, iota_prime);
    RingElem c = RingElem::scalar(Presentation::get(PresId::K), FieldElem::gen(f));
    bool ok = lhs(c) == iota(c) && lhs(c) == RingElem::scalar(ST, FieldElem::gen(f));
    out.push_back({"iota = psi.iota_prime", ok});
  }
  out.push_back({"pi_A.psi = phi.factor_R_kx",
                 agree_on_generators(RingHom::compose(pi_A, psi),
                                     RingHom::compose(phi, factor_R_kx))});
  out.push_back({"zeta.phi = phi", agree_on_generators(RingHom::compose(zeta, phi), phi)});
  out.push_back({"ev_s1.h = id",
                 agree_on_generators(RingHom::compose(ev_s1, h), RingHom::identity(RP, f))});
  {
    RingHom e0h = RingHom::compose(ev_s0, h);
    bool constant = true;
    for (const RingElem& im : e0h.images()) constant = constant && im.is_constant();
    out.push_back({"ev_s0.h lands in k", constant});
  }
  return out;
}

}  // namespace hw
