#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hw/error.hpp"

namespace hw {

struct Gf2DivMod;

/// Polynomial over GF(2) in one indeterminate, stored as a bit vector
/// (bit i of word j = coefficient of u^(64j+i)). Always trimmed.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  static Gf2Poly zero() { return {}; }
  static Gf2Poly one() { return from_bits(1); }
  static Gf2Poly gen() { return from_bits(2); }
  static Gf2Poly from_bits(std::uint64_t bits);
  /// Most-significant-coefficient-first 0/1 string, e.g. "111" = u^2+u+1.
  static Gf2Poly from_bit_string(const std::string& s);

  bool is_zero() const { return w_.empty(); }
  bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
  int degree() const;  // -1 for the zero polynomial
  bool coeff(int i) const;
  void set_coeff(int i);

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;
  bool operator<(const Gf2Poly& o) const;  // by degree, then bits; for set keys

  Gf2Poly operator+(const Gf2Poly& o) const;
  Gf2Poly operator*(const Gf2Poly& o) const;
  Gf2Poly shifted(int k) const;  // * u^k

  Gf2DivMod divmod(const Gf2Poly& d) const;  // d != 0
  static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

  /// In char 2, p is a square iff all odd-degree coefficients vanish.
  bool is_square() const;
  Gf2Poly sqrt() const;  // pre: is_square()

  bool is_irreducible() const;

  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<std::uint64_t> w_;
};

struct Gf2DivMod {
  Gf2Poly q, r;
};

enum class FieldKind { Gf2n, RatFunc };

/// Coefficient-field descriptor: GF(2^n) with a pinned irreducible modulus,
/// or the rational function field F2(u). Small value type.
class Field {
 public:
  /// degree in [1,16]; modulus_bits encodes the irreducible modulus
  /// (bit i = coefficient of w^i, so GF(4) = gf2n(2, 0b111)).
  static Field gf2n(int degree, std::uint64_t modulus_bits);
  static Field f2_rational();

  FieldKind kind() const { return kind_; }
  int degree() const { return deg_; }
  std::uint64_t modulus_bits() const { return mod_; }
  /// Number of elements for finite fields.
  std::optional<std::uint64_t> size() const;

  friend bool operator==(const Field&, const Field&) = default;
  std::string str() const;  // "gf2:<n>:<bits>" or "f2-rational"

 private:
  Field(FieldKind k, int d, std::uint64_t m) : kind_(k), deg_(d), mod_(m) {}
  FieldKind kind_ = FieldKind::RatFunc;
  int deg_ = 0;
  std::uint64_t mod_ = 0;
};

/// Element of a char-2 field in canonical representation: reduced bits for
/// GF(2^n); a lowest-terms fraction of GF(2)[u]-polynomials for F2(u)
/// (zero is 0/1; denominators over GF(2) are automatically monic).
class FieldElem {
 public:
  FieldElem() = default;  // zero of an unspecified field; assign before use

  static FieldElem zero(const Field& f);
  static FieldElem one(const Field& f);
  static FieldElem gen(const Field& f);  // u for F2(u), w for GF(2^n)
  static FieldElem from_bits(const Field& f, std::uint64_t bits);   // Gf2n only
  static FieldElem ratio(const Field& f, Gf2Poly num, Gf2Poly den); // RatFunc only
  static FieldElem integer(const Field& f, std::uint64_t n) {
    return n % 2 ? one(f) : zero(f);
  }

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::uint64_t bits() const { return bits_; }
  const Gf2Poly& num() const { return num_; }
  const Gf2Poly& den() const { return den_; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem neg() const { return *this; }  // char 2
  FieldElem inv() const;                   // throws DivisionByZero on 0
  FieldElem pow(std::uint64_t e) const;

  friend bool operator==(const FieldElem&, const FieldElem&);

  /// (true, r) with r*r == x, or (false, nullopt). Always true over GF(2^n).
  std::optional<FieldElem> sqrt() const;
  bool is_square() const { return sqrt().has_value(); }

  std::string str() const;
  /// Stable total order for use as a map/set key.
  bool operator<(const FieldElem& o) const;

 private:
  Field field_ = Field::f2_rational();
  std::uint64_t bits_ = 0;  // Gf2n value
  Gf2Poly num_, den_;       // RatFunc value
};

void require_same_field(const FieldElem& a, const FieldElem& b);

}  // namespace hw
