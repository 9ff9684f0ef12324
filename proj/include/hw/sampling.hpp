#pragma once

#include <cstdint>
#include <random>

#include "hw/ring.hpp"

namespace hw {

/// Deterministic random elements for property tests and the CLI checks.
/// Coefficients are drawn from a degree<=2 slice of the field; monomials are
/// uniform of total degree <= the bound.
class Sampler {
 public:
  Sampler(const Field& f, std::uint64_t seed) : field_(f), rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  FieldElem coeff();           // may be zero
  FieldElem nonzero_coeff();
  RingElem poly(const Presentation& p, int max_degree, int max_terms = 6);
  /// Unit of A = k[s,t]/(s^2,st,t^2): nonzero constant term, degree<=3 slice.
  RingElem unit_A(const Presentation& A);
  /// Unit a of A with 1-a also a unit.
  RingElem unit_A_with_unit_complement(const Presentation& A);

 private:
  Field field_;
  std::mt19937_64 rng_;
};

}  // namespace hw
