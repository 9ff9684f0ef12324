#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hw/error.hpp"

namespace hw {

inline constexpr int kMaxVars = 8;

/// Commutative monomial as an exponent vector over at most kMaxVars generators.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  static Monomial one() { return {}; }
  static Monomial var(int i, int pow = 1) {
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(pow);
    return m;
  }

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      m.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    return m;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Monomial divide_into(const Monomial& o) const {  // o / this, pre: divides(o)
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      m.e[i] = static_cast<std::uint16_t>(o.e[i] - e[i]);
    return m;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
    return m;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Degree-lexicographic order; at equal total degree the earlier generator
/// dominates, so e.g. a^2 > x*y in k[a,x,y].
struct DegLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

/// One rewrite rule lhs -> sum(rhs); all catalog rules have 0/1 coefficients.
struct RewriteRule {
  Monomial lhs;
  std::vector<Monomial> rhs;
};

enum class PresId { K, PolyST, PolyX, PolyAXY, R, A, RP, RPS };

/// A presented quotient ring: ordered generators, relators, and an oriented
/// rewrite system whose normal forms represent elements. Instances are
/// compared by identity; the named catalog is accessed through get().
class Presentation {
 public:
  Presentation(std::string name, std::vector<std::string> vars,
               std::vector<RewriteRule> rules, std::vector<std::vector<Monomial>> relators,
               std::vector<int> weights = {});

  const std::string& name() const { return name_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  int var_index(std::string_view v) const;  // -1 if absent
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool is_free() const { return rules_.empty(); }
  const std::vector<std::vector<Monomial>>& relators() const { return relators_; }
  int weight(int var) const { return weights_[static_cast<std::size_t>(var)]; }
  int weighted_degree(const Monomial& m) const;

  static const Presentation& get(PresId id);
  static const std::vector<PresId>& catalog();

  std::string monomial_str(const Monomial& m) const;

 private:
  std::string name_;
  std::vector<std::string> vars_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<Monomial>> relators_;
  std::vector<int> weights_;
};

inline bool same_presentation(const Presentation& a, const Presentation& b) { return &a == &b; }

}  // namespace hw
