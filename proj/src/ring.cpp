#include "hw/ring.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hw {

namespace {

void add_term(TermMap& terms, const Monomial& m, const FieldElem& c) {
  if (c.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
    return;
  }
  FieldElem s = it->second + c;
  if (s.is_zero())
    terms.erase(it);
  else
    it->second = s;
}

// Replaces c * m, where rule.lhs divides m, by c * (m / lhs) * sum(rhs).
void apply_rule(TermMap& terms, const Monomial& m, const FieldElem& c, const RewriteRule& rule) {
  Monomial q = rule.lhs.divide_into(m);
  for (const Monomial& r : rule.rhs) add_term(terms, q * r, c);
}

// Normal-form computation. Deterministic strategy: repeatedly rewrite the
// largest reducible monomial with the first applicable rule.
void normalize(const Presentation& p, TermMap& terms) {
  if (p.is_free()) return;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      for (const RewriteRule& rule : p.rules()) {
        if (!rule.lhs.divides(it->first)) continue;
        Monomial m = it->first;
        FieldElem c = it->second;
        terms.erase(std::next(it).base());
        apply_rule(terms, m, c, rule);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
}

}  // namespace

RingElem RingElem::zero(const Presentation& p, const Field& f) {
  RingElem e;
  e.pres_ = &p;
  e.field_ = f;
  return e;
}

RingElem RingElem::one(const Presentation& p, const Field& f) {
  return scalar(p, FieldElem::one(f));
}

RingElem RingElem::scalar(const Presentation& p, const FieldElem& c) {
  RingElem e = zero(p, c.field());
  if (!c.is_zero()) e.terms_.emplace(Monomial::one(), c);
  return e;
}

RingElem RingElem::generator(const Presentation& p, const Field& f, int var, int pow) {
  if (var < 0 || var >= p.nvars()) fail(Err::BadIndex, "no such generator in " + p.name());
  return from_terms(p, f, {{Monomial::var(var, pow), FieldElem::one(f)}});
}

RingElem RingElem::generator(const Presentation& p, const Field& f, std::string_view var,
                             int pow) {
  int i = p.var_index(var);
  if (i < 0) fail(Err::BadIndex, std::string(var) + " is not a generator of " + p.name());
  return generator(p, f, i, pow);
}

RingElem RingElem::monomial(const Presentation& p, const FieldElem& c, const Monomial& m) {
  return from_terms(p, c.field(), {{m, c}});
}

RingElem RingElem::from_terms(const Presentation& p, const Field& f, TermMap terms) {
  RingElem e = zero(p, f);
  e.terms_ = std::move(terms);
  std::erase_if(e.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  normalize(p, e.terms_);
  return e;
}

bool RingElem::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one();
}

bool RingElem::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

FieldElem RingElem::constant_term() const {
  auto it = terms_.find(Monomial::one());
  return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

FieldElem RingElem::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElem::zero(field_) : it->second;
}

int RingElem::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

int RingElem::weighted_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, pres_->weighted_degree(m));
  return d;
}

namespace {
void require_compatible(const RingElem& a, const RingElem& b) {
  if (!a.valid() || !b.valid()) fail(Err::BadParameter, "operation on a detached ring element");
  if (!same_presentation(a.pres(), b.pres()))
    fail(Err::PresentationMismatch, a.pres().name() + " vs " + b.pres().name());
  if (!(a.field() == b.field()))
    fail(Err::FieldMismatch, a.field().str() + " vs " + b.field().str());
}
}  // namespace

RingElem RingElem::operator+(const RingElem& o) const {
  require_compatible(*this, o);
  TermMap t = terms_;
  for (const auto& [m, c] : o.terms_) add_term(t, m, c);
  // Sums of normal forms are normal; no rewriting needed.
  RingElem e = zero(*pres_, field_);
  e.terms_ = std::move(t);
  return e;
}

RingElem RingElem::operator*(const RingElem& o) const {
  require_compatible(*this, o);
  TermMap t;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) add_term(t, m1 * m2, c1 * c2);
  return from_terms(*pres_, field_, std::move(t));
}

RingElem RingElem::operator*(const FieldElem& c) const {
  TermMap t;
  for (const auto& [m, k] : terms_) add_term(t, m, k * c);
  RingElem e = zero(*pres_, field_);
  e.terms_ = std::move(t);
  return e;
}

RingElem RingElem::pow(unsigned e) const {
  RingElem acc = one(*pres_, field_), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool RingElem::operator==(const RingElem& o) const {
  return pres_ == o.pres_ && field_ == o.field_ && terms_ == o.terms_;
}

namespace {
bool needs_parens(const FieldElem& c) {
  std::string s = c.str();
  return s.find('+') != std::string::npos || s.find('/') != std::string::npos;
}
}  // namespace

std::string RingElem::str() const {
  if (!valid()) return "<null>";
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending deg-lex, matching the usual leading-term-first layout.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << "+";
    first = false;
    const std::string mono = pres_->monomial_str(it->first);
    const FieldElem& c = it->second;
    if (it->first.is_one()) {
      out << (needs_parens(c) ? "(" + c.str() + ")" : c.str());
    } else if (c.is_one()) {
      out << mono;
    } else {
      out << (needs_parens(c) ? "(" + c.str() + ")" : c.str()) << "*" << mono;
    }
  }
  return out.str();
}

// --- unit detection --------------------------------------------------------

std::optional<RingElem> try_ring_inverse(const RingElem& f, int max_log2) {
  if (!f.valid()) fail(Err::BadParameter, "detached element");
  FieldElem c = f.constant_term();
  if (c.is_zero()) return std::nullopt;
  FieldElem cinv = c.inv();
  RingElem n = (f + RingElem::scalar(f.pres(), c)) * cinv;  // f/c = 1 + n
  // Verify nilpotency by repeated squaring (cheap in char 2), then assemble
  // (1+n)^-1 = prod (1 + n^(2^i)) over the powers below the vanishing one.
  std::vector<RingElem> powers;  // n, n^2, n^4, ...
  RingElem p = n;
  bool nilpotent = p.is_zero();
  for (int m = 0; m <= max_log2 && !nilpotent; ++m) {
    powers.push_back(p);
    p = p * p;
    nilpotent = p.is_zero();
  }
  if (!nilpotent) return std::nullopt;
  RingElem inv = RingElem::one(f.pres(), f.field());
  for (const RingElem& q : powers) inv = inv * (RingElem::one(f.pres(), f.field()) + q);
  inv = inv * cinv;
  if (!(f * inv).is_one()) return std::nullopt;
  return inv;
}

RingElem ring_inverse(const RingElem& f, int max_log2) {
  auto inv = try_ring_inverse(f, max_log2);
  if (!inv) fail(Err::NotAUnit, f.str() + " is not a verified unit of " + f.pres().name());
  return *inv;
}

bool ring_is_unit(const RingElem& f, int max_log2) {
  return try_ring_inverse(f, max_log2).has_value();
}

// --- exact division --------------------------------------------------------

std::optional<RingElem> try_divide_exact(const RingElem& f, const RingElem& d,
                                         RingElem* remainder) {
  require_compatible(f, d);
  if (!f.pres().is_free()) fail(Err::BadParameter, "divide_exact needs a free polynomial ring");
  if (d.is_zero()) fail(Err::DivisionByZero, "division by the zero polynomial");
  const Monomial lead = d.terms().rbegin()->first;
  const FieldElem lead_c = d.terms().rbegin()->second;
  TermMap rest = f.terms();
  TermMap q, rem;
  while (!rest.empty()) {
    auto top = std::prev(rest.end());
    if (lead.divides(top->first)) {
      Monomial qm = lead.divide_into(top->first);
      FieldElem qc = top->second * lead_c.inv();
      add_term(q, qm, qc);
      for (const auto& [m, c] : d.terms()) add_term(rest, qm * m, qc * c);  // char 2: subtract
    } else {
      add_term(rem, top->first, top->second);
      rest.erase(top);
    }
  }
  if (!rem.empty()) {
    if (remainder) *remainder = RingElem::from_terms(f.pres(), f.field(), rem);
    return std::nullopt;
  }
  return RingElem::from_terms(f.pres(), f.field(), std::move(q));
}

RingElem divide_exact(const RingElem& f, const RingElem& d) {
  RingElem rem;
  auto q = try_divide_exact(f, d, &rem);
  if (!q) fail(Err::NotDivisible, "remainder " + rem.str());
  return *q;
}

// --- confluence -------------------------------------------------------------

namespace {

RingElem reduce_from_monomial(const Presentation& p, const Field& f, const Monomial& m,
                              std::size_t first_rule) {
  TermMap t;
  apply_rule(t, m, FieldElem::one(f), p.rules()[first_rule]);
  return RingElem::from_terms(p, f, std::move(t));
}

// Fully reduces raw terms choosing rules/monomials by the given RNG.
RingElem reduce_shuffled(const Presentation& p, const Field& f, TermMap terms,
                         std::mt19937_64& rng) {
  while (true) {
    std::vector<std::pair<Monomial, std::size_t>> redexes;
    for (const auto& [m, c] : terms)
      for (std::size_t r = 0; r < p.rules().size(); ++r)
        if (p.rules()[r].lhs.divides(m)) redexes.emplace_back(m, r);
    if (redexes.empty()) break;
    auto& [m, r] = redexes[std::uniform_int_distribution<std::size_t>(0, redexes.size() - 1)(rng)];
    FieldElem c = terms.at(m);
    terms.erase(m);
    apply_rule(terms, m, c, p.rules()[r]);
  }
  RingElem e = RingElem::zero(p, f);
  for (const auto& [m, c] : terms)
    if (!c.is_zero()) e = e + RingElem::monomial(p, c, m);
  return e;
}

}  // namespace

ConfluenceReport check_confluence(const Presentation& p, const Field& f) {
  ConfluenceReport rep;
  const auto& rules = p.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i; j < rules.size(); ++j) {
      Monomial overlap = Monomial::lcm(rules[i].lhs, rules[j].lhs);
      ++rep.overlaps_checked;
      RingElem via_i = reduce_from_monomial(p, f, overlap, i);
      RingElem via_j = reduce_from_monomial(p, f, overlap, j);
      if (!(via_i == via_j)) {
        rep.ok = false;
        rep.detail = "overlap " + p.monomial_str(overlap) + " reduces to " + via_i.str() +
                     " and " + via_j.str();
        return rep;
      }
    }
  }
  return rep;
}

bool check_confluence_randomized(const Presentation& p, const Field& f, int samples,
                                 int max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nterms(1, 6);
  std::uniform_int_distribution<int> expo(0, std::max(1, max_degree / 2));
  for (int s = 0; s < samples; ++s) {
    TermMap raw;
    for (int t = nterms(rng); t > 0; --t) {
      Monomial m;
      for (int v = 0; v < p.nvars(); ++v) m.e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(expo(rng));
      add_term(raw, m, FieldElem::one(f));
    }
    RingElem reference = RingElem::from_terms(p, f, raw);
    RingElem shuffled = reduce_shuffled(p, f, raw, rng);
    if (!(reference == shuffled)) return false;
  }
  return true;
}

}  // namespace hw
