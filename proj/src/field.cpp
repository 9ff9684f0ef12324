#include "hw/field.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace hw {

// ---------------------------------------------------------------------------
// Gf2Poly

Gf2Poly Gf2Poly::from_bits(std::uint64_t bits) {
  Gf2Poly p;
  if (bits) p.w_.push_back(bits);
  return p;
}

Gf2Poly Gf2Poly::from_bit_string(const std::string& s) {
  Gf2Poly p;
  int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    char c = s[i];
    if (c != '0' && c != '1') fail(Err::BadParameter, "bit string must be over {0,1}: " + s);
    if (c == '1') p.set_coeff(n - 1 - i);
  }
  return p;
}

void Gf2Poly::trim() {
  while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

int Gf2Poly::degree() const {
  if (w_.empty()) return -1;
  std::uint64_t top = w_.back();
  int bit = 63;
  while (!(top >> bit & 1)) --bit;
  return static_cast<int>(w_.size() - 1) * 64 + bit;
}

bool Gf2Poly::coeff(int i) const {
  if (i < 0) return false;
  std::size_t word = static_cast<std::size_t>(i) / 64;
  if (word >= w_.size()) return false;
  return w_[word] >> (i % 64) & 1;
}

void Gf2Poly::set_coeff(int i) {
  std::size_t word = static_cast<std::size_t>(i) / 64;
  if (word >= w_.size()) w_.resize(word + 1, 0);
  w_[word] ^= std::uint64_t(1) << (i % 64);
  trim();
}

bool Gf2Poly::operator<(const Gf2Poly& o) const {
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  for (std::size_t i = w_.size(); i-- > 0;)
    if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
  return false;
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
  Gf2Poly r;
  r.w_.resize(std::max(w_.size(), o.w_.size()), 0);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] ^= w_[i];
  for (std::size_t i = 0; i < o.w_.size(); ++i) r.w_[i] ^= o.w_[i];
  r.trim();
  return r;
}

Gf2Poly Gf2Poly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  Gf2Poly r;
  int wordshift = k / 64, bitshift = k % 64;
  r.w_.assign(w_.size() + wordshift + 1, 0);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    r.w_[i + wordshift] ^= w_[i] << bitshift;
    if (bitshift) r.w_[i + wordshift + 1] ^= w_[i] >> (64 - bitshift);
  }
  r.trim();
  return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  Gf2Poly r;
  r.w_.assign(w_.size() + o.w_.size(), 0);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    std::uint64_t word = w_[i];
    while (word) {
      int bit = std::countr_zero(word);
      word &= word - 1;
      int shift = static_cast<int>(i) * 64 + bit;
      int wordshift = shift / 64, bitshift = shift % 64;
      for (std::size_t j = 0; j < o.w_.size(); ++j) {
        r.w_[j + wordshift] ^= o.w_[j] << bitshift;
        if (bitshift) r.w_[j + wordshift + 1] ^= o.w_[j] >> (64 - bitshift);
      }
    }
  }
  r.trim();
  return r;
}

Gf2DivMod Gf2Poly::divmod(const Gf2Poly& d) const {
  if (d.is_zero()) fail(Err::DivisionByZero, "polynomial division by zero");
  Gf2DivMod out;
  out.r = *this;
  int dd = d.degree();
  while (out.r.degree() >= dd) {
    int shift = out.r.degree() - dd;
    out.r = out.r + d.shifted(shift);
    out.q.set_coeff(shift);
  }
  return out;
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a.divmod(b).r;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool Gf2Poly::is_square() const {
  int d = degree();
  for (int i = 1; i <= d; i += 2)
    if (coeff(i)) return false;
  return true;
}

Gf2Poly Gf2Poly::sqrt() const {
  Gf2Poly r;
  int d = degree();
  for (int i = 0; i <= d; i += 2)
    if (coeff(i)) r.set_coeff(i / 2);
  return r;
}

bool Gf2Poly::is_irreducible() const {
  int n = degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  // Trial division; a reducible polynomial has a factor of degree <= n/2.
  for (int d = 1; d <= n / 2; ++d) {
    for (std::uint64_t bits = std::uint64_t(1) << d; bits < (std::uint64_t(1) << (d + 1)); ++bits) {
      if (divmod(from_bits(bits)).r.is_zero()) return false;
    }
  }
  return true;
}

std::string Gf2Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (!coeff(i)) continue;
    if (!first) out << "+";
    first = false;
    if (i == 0)
      out << "1";
    else if (i == 1)
      out << var;
    else
      out << var << "^" << i;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Field

Field Field::gf2n(int degree, std::uint64_t modulus_bits) {
  if (degree < 1 || degree > 16) fail(Err::BadParameter, "GF(2^n) supports 1 <= n <= 16");
  Gf2Poly m = Gf2Poly::from_bits(modulus_bits);
  if (m.degree() != degree)
    fail(Err::BadParameter, "modulus degree " + std::to_string(m.degree()) +
                                " does not match field degree " + std::to_string(degree));
  if (!m.is_irreducible()) fail(Err::BadParameter, "modulus " + m.str("w") + " is reducible");
  return Field(FieldKind::Gf2n, degree, modulus_bits);
}

Field Field::f2_rational() { return Field(FieldKind::RatFunc, 0, 0); }

std::optional<std::uint64_t> Field::size() const {
  if (kind_ == FieldKind::Gf2n) return std::uint64_t(1) << deg_;
  return std::nullopt;
}

std::string Field::str() const {
  if (kind_ == FieldKind::RatFunc) return "f2-rational";
  std::string bits;
  for (int i = deg_; i >= 0; --i) bits += (mod_ >> i & 1) ? '1' : '0';
  return "gf2:" + std::to_string(deg_) + ":" + bits;
}

// ---------------------------------------------------------------------------
// FieldElem

namespace {

std::uint64_t gf2n_reduce(std::uint64_t p, int n, std::uint64_t mod, int prod_degree) {
  for (int i = prod_degree; i >= n; --i)
    if (p >> i & 1) p ^= mod << (i - n);
  return p;
}

std::uint64_t gf2n_mul(std::uint64_t a, std::uint64_t b, int n, std::uint64_t mod) {
  std::uint64_t p = 0;
  for (int i = 0; i < n; ++i)
    if (a >> i & 1) p ^= b << i;
  return gf2n_reduce(p, n, mod, 2 * n - 2);
}

}  // namespace

FieldElem FieldElem::zero(const Field& f) {
  FieldElem e;
  e.field_ = f;
  if (f.kind() == FieldKind::RatFunc) e.den_ = Gf2Poly::one();
  return e;
}

FieldElem FieldElem::one(const Field& f) {
  FieldElem e = zero(f);
  if (f.kind() == FieldKind::Gf2n)
    e.bits_ = 1;
  else
    e.num_ = Gf2Poly::one();
  return e;
}

FieldElem FieldElem::gen(const Field& f) {
  if (f.kind() == FieldKind::Gf2n) {
    if (f.degree() == 1) return one(f);  // GF(2): the only unit
    return from_bits(f, 2);
  }
  FieldElem e = zero(f);
  e.num_ = Gf2Poly::gen();
  return e;
}

FieldElem FieldElem::from_bits(const Field& f, std::uint64_t bits) {
  if (f.kind() != FieldKind::Gf2n) fail(Err::BadParameter, "from_bits needs a GF(2^n) field");
  if (bits >> f.degree()) fail(Err::BadParameter, "value out of range for " + f.str());
  FieldElem e = zero(f);
  e.bits_ = bits;
  return e;
}

FieldElem FieldElem::ratio(const Field& f, Gf2Poly num, Gf2Poly den) {
  if (f.kind() != FieldKind::RatFunc) fail(Err::BadParameter, "ratio needs the f2-rational field");
  if (den.is_zero()) fail(Err::DivisionByZero, "zero denominator");
  if (num.is_zero()) return zero(f);
  Gf2Poly g = Gf2Poly::gcd(num, den);
  FieldElem e = zero(f);
  e.num_ = num.divmod(g).q;
  e.den_ = den.divmod(g).q;
  return e;
}

bool FieldElem::is_zero() const {
  return field_.kind() == FieldKind::Gf2n ? bits_ == 0 : num_.is_zero();
}

bool FieldElem::is_one() const {
  return field_.kind() == FieldKind::Gf2n ? bits_ == 1 : (num_.is_one() && den_.is_one());
}

void require_same_field(const FieldElem& a, const FieldElem& b) {
  if (!(a.field() == b.field()))
    fail(Err::FieldMismatch, a.field().str() + " vs " + b.field().str());
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require_same_field(*this, o);
  if (field_.kind() == FieldKind::Gf2n) return from_bits(field_, bits_ ^ o.bits_);
  return ratio(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require_same_field(*this, o);
  if (field_.kind() == FieldKind::Gf2n)
    return from_bits(field_, gf2n_mul(bits_, o.bits_, field_.degree(), field_.modulus_bits()));
  return ratio(field_, num_ * o.num_, den_ * o.den_);
}

FieldElem FieldElem::inv() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
  if (field_.kind() == FieldKind::Gf2n) {
    // x^(2^n - 2) is the inverse of x in GF(2^n).
    return pow((std::uint64_t(1) << field_.degree()) - 2);
  }
  FieldElem e = zero(field_);
  e.num_ = den_;
  e.den_ = num_;
  return e;
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem acc = one(field_), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  return a.field_ == b.field_ && a.bits_ == b.bits_ && a.num_ == b.num_ && a.den_ == b.den_;
}

std::optional<FieldElem> FieldElem::sqrt() const {
  if (field_.kind() == FieldKind::Gf2n) {
    // Frobenius is bijective on finite fields: sqrt(x) = x^(2^(n-1)).
    FieldElem r = pow(std::uint64_t(1) << (field_.degree() - 1));
    return r * r == *this ? std::optional<FieldElem>(r) : std::nullopt;
  }
  // Lowest terms are unique over GF(2), so p/q is a square iff p and q are.
  if (!num_.is_square() || !den_.is_square()) return std::nullopt;
  return ratio(field_, num_.sqrt(), den_.sqrt());
}

std::string FieldElem::str() const {
  if (field_.kind() == FieldKind::Gf2n) {
    Gf2Poly p = Gf2Poly::from_bits(bits_);
    return p.str("w");
  }
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool FieldElem::operator<(const FieldElem& o) const {
  if (field_.kind() == FieldKind::Gf2n) return bits_ < o.bits_;
  if (num_ == o.num_) return den_ < o.den_;
  return num_ < o.num_;
}

}  // namespace hw
