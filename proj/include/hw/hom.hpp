#pragma once

#include <string>
#include <vector>

#include "hw/ring.hpp"

namespace hw {

/// k-algebra homomorphism between presented rings, given by generator images.
/// Construction machine-checks that every source relator maps to zero.
class RingHom {
 public:
  RingHom(std::string name, const Presentation& src, const Presentation& dst,
          std::vector<RingElem> images);

  const std::string& name() const { return name_; }
  const Presentation& source() const { return *src_; }
  const Presentation& target() const { return *dst_; }
  const Field& field() const { return field_; }
  const std::vector<RingElem>& images() const { return images_; }

  RingElem operator()(const RingElem& f) const;

  /// g after f (pointwise g(f(x))); presentations must chain.
  static RingHom compose(const RingHom& g, const RingHom& f);
  static RingHom identity(const Presentation& p, const Field& f);

 private:
  std::string name_;
  const Presentation* src_;
  const Presentation* dst_;
  Field field_;
  std::vector<RingElem> images_;
};

/// The catalog of the concrete homomorphisms the verification uses:
///   psi:  R -> k[s,t],         a->st, x->t, y->s^2 t
///   pi_A: k[s,t] -> A          (canonical projection)
///   pi_R: k[a,x,y] -> R        (canonical projection)
///   phi:  k[x] -> A,           x -> t
///   zeta: A -> A,              s -> 0, t -> t
///   iota: k -> k[s,t], iota_prime: k -> R
///   factor_R_kx: R -> k[x],    a -> 0, x -> x, y -> 0
///   ev0, ev1: R' -> k[a,x,y],  t -> 0 and t -> a^2+xy
///   h: R' -> R'[s],            g -> s^|g| g  (|t|=2, |a|=|x|=|y|=1)
///   ev_s0, ev_s1: R'[s] -> R', s -> 0 and s -> 1
struct StandardHoms {
  RingHom psi, pi_A, pi_R, phi, zeta, iota, iota_prime, factor_R_kx;
  RingHom ev0, ev1, h, ev_s0, ev_s1;

  static StandardHoms build(const Field& f);

  std::vector<const RingHom*> all() const;

  /// The factorization identities, each machine-checked on generators:
  /// iota = psi . iota_prime; pi_A . psi = phi . factor_R_kx; zeta . phi = phi;
  /// ev_s1 . h = id; ev_s0 . h lands in k.
  struct IdentityCheck {
    std::string name;
    bool ok;
  };
  std::vector<IdentityCheck> verify_identities() const;
};

/// True when the homs agree on every generator of their common source
/// (and on the constant 1 for generator-free sources).
bool agree_on_generators(const RingHom& f, const RingHom& g);

}  // namespace hw
