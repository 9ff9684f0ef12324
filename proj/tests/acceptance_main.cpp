// Acceptance suite: runs every criterion at its stated tolerance and time
// budget and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hw/checks.hpp"
#include "hw/parse.hpp"
#include "hw/patching.hpp"
#include "hw/sampling.hpp"
#include "hw/steinberg.hpp"
#include "hw/witt.hpp"

using namespace hw;

namespace {

const Field rat = Field::f2_rational();
const Field gf2 = Field::gf2n(1, 0b10);
const Field gf4 = Field::gf2n(2, 0b111);
const Field gf8 = Field::gf2n(3, 0b1011);

struct Criterion {
  int number;
  std::string name;
  std::int64_t budget_ms;
  std::function<bool()> run;
};

bool criterion_six_factor() {
  for (auto [field, uexpr] : {std::pair{rat, "u"}, std::pair{gf4, "w"}}) {
    ElementaryCertificate cert = psi_m_factorization(field, parse_scalar(field, uexpr));
    if (!cert.verify() || cert.factors.size() != 6) return false;
  }
  return true;
}

bool criterion_m0_sl2() {
  Mat m0 = build_m0(rat, FieldElem::gen(rat));
  return m0.det().is_one() && is_symplectic(m0);
}

bool criterion_lemma41() {
  FieldElem u = FieldElem::gen(rat);
  return check_lemma_z_commutators(rat, u).ok &&
         !check_lemma_z_commutators_mutated(rat, u).ok;
}

bool criterion_zeta() {
  FieldElem u = FieldElem::gen(rat);
  StandardHoms homs = StandardHoms::build(rat);
  SteinbergWord zbar = z_word(rat, u).map(homs.pi_A);
  return zbar.map(homs.zeta).is_empty() &&
         build_m(rat, u).map(homs.psi).map(homs.pi_A).is_identity();
}

bool criterion_lemma21() {
  FieldElem u = FieldElem::gen(rat);
  ChainResult res = run_lemma21_chain(rat, u);
  bool corrected_identity = false;
  for (const ChainStep& s : res.steps)
    if (s.name.find("= u") != std::string::npos) corrected_identity = s.ok;
  return res.ok() && corrected_identity && res.cert.verify() &&
         res.cert.target == diag3(build_m0(rat, u));
}

bool criterion_lemma47() {
  FieldElem u = FieldElem::gen(rat);
  IsometryWitness twisted = lemma47_isometry(rat, u);
  IsometryWitness standard = lemma47_isometry(rat, FieldElem::one(rat));
  const Presentation& A = Presentation::get(PresId::A);
  RingElem s = RingElem::generator(A, rat, "s");
  RingElem t = RingElem::generator(A, rat, "t");
  bool shapes = twisted.target.gram.at(1, 1) == s * u &&
                twisted.target.gram.at(2, 2) == t * u.inv() &&
                standard.target.gram.at(1, 1) == s && standard.target.gram.at(2, 2) == t;
  bool residue = twisted.basis_change.det().constant_term().is_one() &&
                 standard.basis_change.det().constant_term().is_one();
  return twisted.verify() && standard.verify() && shapes && residue;
}

bool criterion_pfister() {
  PfisterReport rep = verify_pfister_relations(rat, 20, 0);
  return rep.ok();
}

bool criterion_norm_groups() {
  const Presentation& A = Presentation::get(PresId::A);
  // separation over F2(u)
  {
    FieldElem u = FieldElem::gen(rat);
    RingElem s = RingElem::generator(A, rat, "s");
    RingElem t = RingElem::generator(A, rat, "t");
    RingElem us = s * u;
    if (!norm_group_membership(a_form(A, rat, us, t * u.inv()), us).member) return false;
    if (norm_group_membership(a_form(A, rat, s, t), us).member) return false;
  }
  // GF(4) negative control: equal oracle sets
  {
    FieldElem w = FieldElem::gen(gf4);
    RingElem s = RingElem::generator(A, gf4, "s");
    RingElem t = RingElem::generator(A, gf4, "t");
    auto lhs = norm_group_oracle(a_form(A, gf4, s, t));
    auto rhs = norm_group_oracle(a_form(A, gf4, s * w, t * w * w));
    if (lhs.size() != rhs.size()) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (!(lhs[i] == rhs[i])) return false;
  }
  // decision procedure agrees with the oracle on every target, ten random
  // (lambda, mu) pairs per finite field
  for (const Field& f : {gf2, gf4, gf8}) {
    RingElem s = RingElem::generator(A, f, "s");
    RingElem t = RingElem::generator(A, f, "t");
    Sampler smp(f, 0);
    for (int rep = 0; rep < 10; ++rep) {
      FieldElem lambda = smp.nonzero_coeff(), mu = smp.nonzero_coeff();
      BilinearSpace e = a_form(A, f, s * lambda, t * mu);
      auto oracle = norm_group_oracle(e);
      auto in_oracle = [&](const RingElem& v) {
        for (const RingElem& o : oracle)
          if (o == v) return true;
        return false;
      };
      for (std::uint64_t b0 = 0; b0 < *f.size(); ++b0)
        for (std::uint64_t b1 = 0; b1 < *f.size(); ++b1)
          for (std::uint64_t b2 = 0; b2 < *f.size(); ++b2) {
            RingElem target = RingElem::scalar(A, FieldElem::from_bits(f, b0)) +
                              s * FieldElem::from_bits(f, b1) + t * FieldElem::from_bits(f, b2);
            if (norm_group_membership(e, target).member != in_oracle(target)) return false;
          }
    }
  }
  return true;
}

bool criterion_knebusch() {
  const Presentation& A = Presentation::get(PresId::A);
  KnebuschReport rep = knebusch_hypotheses(A, rat, FieldElem::gen(rat));
  return rep.ok();
}

bool criterion_distinctness() {
  FieldElem u = FieldElem::gen(rat);
  const Presentation& A = Presentation::get(PresId::A);
  DistinctnessResult yes = rho_zbar_distinctness(rat, u);
  if (!yes.distinct || !yes.witness ||
      !(*yes.witness == RingElem::generator(A, rat, "s") * u))
    return false;
  FieldElem square = (FieldElem::one(rat) + u).pow(2);
  if (rho_zbar_distinctness(rat, square).distinct) return false;
  // every valid u over GF(4) and GF(8) is a square: expect non-distinct
  for (const Field& f : {gf4, gf8}) {
    for (std::uint64_t b = 2; b < *f.size(); ++b) {
      FieldElem v = FieldElem::from_bits(f, b);
      if (v.is_zero() || v.is_one()) continue;
      if (rho_zbar_distinctness(f, v).distinct) return false;
    }
  }
  return true;
}

bool criterion_milnor() {
  FieldElem u = FieldElem::gen(rat);
  MilnorSquare sq = MilnorSquare::build(rat);
  if (!sq.check()) return false;
  const Presentation& AXY = Presentation::get(PresId::PolyAXY);
  RingElem relator = RingElem::generator(AXY, rat, "a").pow(2) +
                     RingElem::generator(AXY, rat, "x") * RingElem::generator(AXY, rat, "y");
  Sampler smp(rat, 0);
  StandardHoms homs = StandardHoms::build(rat);
  for (int i = 0; i < 100; ++i) {
    RingElem f = smp.poly(AXY, 5);
    RingElem g = f + relator * smp.poly(AXY, 4);
    RingElem section = pair_section(f, g);
    if (!(homs.ev0(section) == f) || !(homs.ev1(section) == g)) return false;
  }
  ChainResult chain = run_lemma21_chain(rat, u);
  LiftResult lift = lift_certificate(chain.cert);
  if (!(lift.e.map(homs.pi_R) == diag3(build_m0(rat, u)))) return false;
  if (!(lift.e * lift.einv).is_identity()) return false;
  FreenessWitness witness = freeness_witness(lift, diag3(build_m0(rat, u)));
  if (!witness.verified) return false;
  return h_extension_checks(rat).ok();
}

bool criterion_substrate() {
  // confluence for every named presentation
  for (PresId id : Presentation::catalog()) {
    const Presentation& p = Presentation::get(id);
    if (!check_confluence(p, rat).ok) return false;
    if (!check_confluence_randomized(p, rat, 150, 6, 0)) return false;
  }
  // 1000 sampled ring-axiom and homomorphism identities at D = 6, seed 0
  Sampler smp(rat, 0);
  StandardHoms homs = StandardHoms::build(rat);
  const Presentation& R = Presentation::get(PresId::R);
  const Presentation& ST = Presentation::get(PresId::PolyST);
  for (int i = 0; i < 500; ++i) {
    RingElem f = smp.poly(R, 6), g = smp.poly(R, 6), h = smp.poly(R, 6);
    if (!(f * g == g * f)) return false;
    if (!((f * g) * h == f * (g * h))) return false;
    if (!(f * (g + h) == f * g + f * h)) return false;
    if (!(homs.psi(f * g) == homs.psi(f) * homs.psi(g))) return false;
  }
  for (int i = 0; i < 500; ++i) {
    RingElem f = smp.poly(ST, 6), g = smp.poly(ST, 6);
    if (!(f + g == g + f)) return false;
    if (!(homs.pi_A(f * g) == homs.pi_A(f) * homs.pi_A(g))) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "six-factor identity over F2(u) and GF(4)", 1000, criterion_six_factor},
      {2, "M0(u) in SL2(R) and Sp2(R)", 1000, criterion_m0_sl2},
      {3, "z = g1 g2 g3 with mutation control", 1000, criterion_lemma41},
      {4, "zeta kills zbar; psi(M(u)) = I mod (s^2,st,t^2)", 1000, criterion_zeta},
      {5, "elementary certificate for diag(M0(u),1)", 5000, criterion_lemma21},
      {6, "Pfister-to-A-form isometries with unit basis determinant", 1000, criterion_lemma47},
      {7, "Pfister relations (a),(b),(c),(e) on 20 seeded tuples", 10000, criterion_pfister},
      {8, "norm-group separation and oracle agreement", 60000, criterion_norm_groups},
      {9, "cancellation-theorem hypotheses over A", 1000, criterion_knebusch},
      {10, "Witt-class distinctness with controls", 5000, criterion_distinctness},
      {11, "Milnor square, sections, lift, freeness witness, h-extension", 10000,
       criterion_milnor},
      {12, "confluence and 1000-sample algebra properties", 30000, criterion_substrate},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    bool ok = false;
    std::string note;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run();
    } catch (const Error& e) {
      ok = false;
      note = std::string(" [") + e.what() + "]";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    bool in_budget = ms < c.budget_ms;
    if (!ok || !in_budget) ++failures;
    std::printf("%s  %2d  %-58s  %5lld ms / %lld ms%s\n",
                ok && in_budget ? "PASS" : "FAIL", c.number, c.name.c_str(),
                static_cast<long long>(ms), static_cast<long long>(c.budget_ms), note.c_str());
  }
  if (failures) std::printf("%d criterion failure(s)\n", failures);
  return failures ? 1 : 0;
}
