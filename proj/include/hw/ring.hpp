#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hw/field.hpp"
#include "hw/presentation.hpp"

namespace hw {

using TermMap = std::map<Monomial, FieldElem, DegLexLess>;

/// Element of a presented quotient ring in normal form: a sparse polynomial
/// whose monomials are all irreducible under the presentation's rules and
/// whose coefficients are nonzero. Equality is termwise.
class RingElem {
 public:
  RingElem() = default;  // detached null element; assign before use

  static RingElem zero(const Presentation& p, const Field& f);
  static RingElem one(const Presentation& p, const Field& f);
  static RingElem scalar(const Presentation& p, const FieldElem& c);
  static RingElem generator(const Presentation& p, const Field& f, int var, int pow = 1);
  static RingElem generator(const Presentation& p, const Field& f, std::string_view var,
                            int pow = 1);
  static RingElem monomial(const Presentation& p, const FieldElem& c, const Monomial& m);
  /// Normalizes the given raw terms.
  static RingElem from_terms(const Presentation& p, const Field& f, TermMap terms);

  bool valid() const { return pres_ != nullptr; }
  const Presentation& pres() const { return *pres_; }
  const Field& field() const { return field_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  FieldElem constant_term() const;
  FieldElem coeff(const Monomial& m) const;
  int degree() const;           // total degree, -1 for zero
  int weighted_degree() const;  // w.r.t. the presentation grading

  RingElem operator+(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  RingElem operator*(const FieldElem& c) const;
  RingElem neg() const { return *this; }  // char 2
  RingElem pow(unsigned e) const;

  bool operator==(const RingElem& o) const;

  std::string str() const;

 private:
  const Presentation* pres_ = nullptr;
  Field field_ = Field::f2_rational();
  TermMap terms_;
};

// --- unit detection -------------------------------------------------------

/// Inverse of f = c + n with c a nonzero constant and n verified nilpotent by
/// repeated squaring (n^(2^m) = 0 with m <= max_log2). Throws NotAUnit.
RingElem ring_inverse(const RingElem& f, int max_log2 = 8);
std::optional<RingElem> try_ring_inverse(const RingElem& f, int max_log2 = 8);
bool ring_is_unit(const RingElem& f, int max_log2 = 8);

// --- exact division in free polynomial rings ------------------------------

/// Quotient q with q*d == f, by division against d's deg-lex leading term.
/// Throws NotDivisible carrying the remainder; the try_ variant reports it.
RingElem divide_exact(const RingElem& f, const RingElem& d);
std::optional<RingElem> try_divide_exact(const RingElem& f, const RingElem& d,
                                         RingElem* remainder = nullptr);

// --- confluence -----------------------------------------------------------

struct ConfluenceReport {
  bool ok = true;
  int overlaps_checked = 0;
  std::string detail;  // first failing overlap when !ok
};

/// Checks every critical overlap lcm(lhs_i, lhs_j): reducing it first by
/// rule i and first by rule j must yield the same normal form.
ConfluenceReport check_confluence(const Presentation& p, const Field& f);

/// Reduces `samples` random raw polynomials with randomly shuffled rule and
/// monomial choice; all reduction orders must agree with the normal form.
bool check_confluence_randomized(const Presentation& p, const Field& f, int samples,
                                 int max_degree, std::uint64_t seed);

}  // namespace hw
