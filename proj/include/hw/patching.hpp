#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hw/mennicke.hpp"

namespace hw {

/// The pullback square for R' = k[a,x,y,t]/(t^2+t(a^2+xy)): evaluation maps
/// ev0 (t -> 0) and ev1 (t -> a^2+xy) into k[a,x,y], glued over the
/// projection to R = k[a,x,y]/(a^2+xy).
struct MilnorSquare {
  RingHom ev0, ev1, pi;

  static MilnorSquare build(const Field& f);
  /// Both legs kill the relator and pi.ev0 = pi.ev1 on generators.
  bool check() const;
};

/// Constructive section of the pullback: for f, g in k[a,x,y] with
/// pi(f) = pi(g), returns the unique r = f + t*q in R' with ev0(r) = f and
/// ev1(r) = g (round-trip machine-checked). Throws NotInPullback.
RingElem pair_section(const RingElem& f, const RingElem& g);

/// Lift of an elementary certificate over R to SL3(k[a,x,y]): each parameter
/// is replaced by its normal-form representative (deg_a <= 1), the lifted
/// product E satisfies pi(E) = target and det(E) = 1 (machine-checked; throws
/// LiftVerifyFailed otherwise). E^-1 comes from the reversed factors.
struct LiftResult {
  Mat e;     // over k[a,x,y]
  Mat einv;  // reversed, negated factors
};
LiftResult lift_certificate(const ElementaryCertificate& cert);

/// Explicit stable-freeness data for the patched module: the basis
/// b_i = (e_i, E e_i) of the rank-3 patched module, together with the
/// mutually inverse forward/backward maps (f,g) -> (f, E g) and
/// (p,q) -> (p, E^-1 q).
struct FreenessWitness {
  Mat e, einv;
  /// basis[i][j] = (coordinate j of e_i, coordinate j of E e_i)
  std::array<std::array<std::pair<RingElem, RingElem>, 3>, 3> basis;
  bool verified = false;
};

/// Builds and verifies the witness against the target N = pi(E): checks
/// E E^-1 = I, the twisted agreement N pi(p) = pi(q) for every basis vector,
/// and that the backward map returns the standard basis exactly.
FreenessWitness freeness_witness(const LiftResult& lift, const Mat& n_over_r);

/// Membership in the patched module P = {(p, q) : M(u) pi(p) = pi(q)} for
/// 2-vectors over k[a,x,y].
bool p_membership(const std::array<RingElem, 2>& p, const std::array<RingElem, 2>& q,
                  const Field& f, const FieldElem& u);

struct HExtensionReport {
  bool relator_homogeneous = false;  // both relator pieces have weight 4
  bool section_identity = false;     // (s->1) . h = id on generators
  bool section_constants = false;    // (s->0) . h lands in k
  bool ok() const { return relator_homogeneous && section_identity && section_constants; }
};

/// The graded-extension checks for h: R' -> R'[s].
HExtensionReport h_extension_checks(const Field& f);

}  // namespace hw
