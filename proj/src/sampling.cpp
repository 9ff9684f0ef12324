#include "hw/sampling.hpp"

namespace hw {

FieldElem Sampler::coeff() {
  if (field_.kind() == FieldKind::Gf2n) {
    std::uniform_int_distribution<std::uint64_t> d(0, *field_.size() - 1);
    return FieldElem::from_bits(field_, d(rng_));
  }
  std::uniform_int_distribution<std::uint64_t> bits(0, 7);  // degree <= 2 numerators
  std::uint64_t n = bits(rng_);
  std::uint64_t den = bits(rng_) | 1;  // nonzero, constant term forced
  return FieldElem::ratio(field_, Gf2Poly::from_bits(n), Gf2Poly::from_bits(den));
}

FieldElem Sampler::nonzero_coeff() {
  for (;;) {
    FieldElem c = coeff();
    if (!c.is_zero()) return c;
  }
}

RingElem Sampler::poly(const Presentation& p, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> deg(0, max_degree);
  TermMap terms;
  for (int i = nterms(rng_); i > 0; --i) {
    // Uniform exponent split of a uniform total degree.
    int budget = deg(rng_);
    Monomial m;
    for (int v = 0; v < p.nvars() && budget > 0; ++v) {
      std::uniform_int_distribution<int> part(0, budget);
      int e = (v + 1 == p.nvars()) ? budget : part(rng_);
      m.e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
      budget -= e;
    }
    FieldElem c = coeff();
    if (c.is_zero()) continue;
    auto [it, fresh] = terms.emplace(m, c);
    if (!fresh) {
      FieldElem s = it->second + c;
      if (s.is_zero())
        terms.erase(it);
      else
        it->second = s;
    }
  }
  return RingElem::from_terms(p, field_, std::move(terms));
}

RingElem Sampler::unit_A(const Presentation& A) {
  RingElem s = RingElem::generator(A, field_, "s");
  RingElem t = RingElem::generator(A, field_, "t");
  return RingElem::scalar(A, nonzero_coeff()) + s * coeff() + t * coeff();
}

RingElem Sampler::unit_A_with_unit_complement(const Presentation& A) {
  RingElem one = RingElem::one(A, field_);
  for (;;) {
    RingElem a = unit_A(A);
    if (!(one + a).constant_term().is_zero()) return a;
  }
}

}  // namespace hw
