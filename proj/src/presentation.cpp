#include "hw/presentation.hpp"

#include <sstream>

namespace hw {

Presentation::Presentation(std::string name, std::vector<std::string> vars,
                           std::vector<RewriteRule> rules,
                           std::vector<std::vector<Monomial>> relators, std::vector<int> weights)
    : name_(std::move(name)),
      vars_(std::move(vars)),
      rules_(std::move(rules)),
      relators_(std::move(relators)),
      weights_(std::move(weights)) {
  if (nvars() > kMaxVars) fail(Err::BadParameter, "too many generators");
  if (weights_.empty()) weights_.assign(vars_.size(), 1);
}

int Presentation::var_index(std::string_view v) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == v) return static_cast<int>(i);
  return -1;
}

int Presentation::weighted_degree(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < nvars(); ++i) d += weights_[static_cast<std::size_t>(i)] * m.e[static_cast<std::size_t>(i)];
  return d;
}

std::string Presentation::monomial_str(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < nvars(); ++i) {
    int p = m.e[static_cast<std::size_t>(i)];
    if (!p) continue;
    if (!first) out << "*";
    first = false;
    out << vars_[static_cast<std::size_t>(i)];
    if (p > 1) out << "^" << p;
  }
  return out.str();
}

namespace {

Monomial mono(std::initializer_list<int> exps) {
  Monomial m;
  std::size_t i = 0;
  for (int e : exps) m.e[i++] = static_cast<std::uint16_t>(e);
  return m;
}

// k (coefficients only).
Presentation make_k() { return Presentation("k", {}, {}, {}); }

Presentation make_poly_st() { return Presentation("k[s,t]", {"s", "t"}, {}, {}); }

Presentation make_poly_x() { return Presentation("k[x]", {"x"}, {}, {}); }

Presentation make_poly_axy() { return Presentation("k[a,x,y]", {"a", "x", "y"}, {}, {}); }

// R = k[a,x,y]/(a^2+xy); deg-lex leading term a^2.
Presentation make_r() {
  Monomial a2 = mono({2, 0, 0}), xy = mono({0, 1, 1});
  return Presentation("R", {"a", "x", "y"}, {{a2, {xy}}}, {{a2, xy}});
}

// A = k[s,t]/(s^2,st,t^2).
Presentation make_a() {
  Monomial s2 = mono({2, 0}), st = mono({1, 1}), t2 = mono({0, 2});
  return Presentation("A", {"s", "t"},
                      {{s2, {}}, {st, {}}, {t2, {}}},
                      {{s2}, {st}, {t2}});
}

// RP = k[a,x,y,t]/(t^2 + t(a^2+xy)); oriented with leading term t^2
// (t-major lex), which strictly lowers t-degree at each step.
Presentation make_rp() {
  Monomial t2 = mono({0, 0, 0, 2}), a2t = mono({2, 0, 0, 1}), xyt = mono({0, 1, 1, 1});
  return Presentation("R'", {"a", "x", "y", "t"}, {{t2, {a2t, xyt}}}, {{t2, a2t, xyt}},
                      {1, 1, 1, 2});
}

// RP with a free variable s adjoined.
Presentation make_rps() {
  Monomial t2 = mono({0, 0, 0, 2, 0}), a2t = mono({2, 0, 0, 1, 0}), xyt = mono({0, 1, 1, 1, 0});
  return Presentation("R'[s]", {"a", "x", "y", "t", "s"}, {{t2, {a2t, xyt}}}, {{t2, a2t, xyt}},
                      {1, 1, 1, 2, 1});
}

}  // namespace

const Presentation& Presentation::get(PresId id) {
  static const Presentation k = make_k();
  static const Presentation poly_st = make_poly_st();
  static const Presentation poly_x = make_poly_x();
  static const Presentation poly_axy = make_poly_axy();
  static const Presentation r = make_r();
  static const Presentation a = make_a();
  static const Presentation rp = make_rp();
  static const Presentation rps = make_rps();
  switch (id) {
    case PresId::K: return k;
    case PresId::PolyST: return poly_st;
    case PresId::PolyX: return poly_x;
    case PresId::PolyAXY: return poly_axy;
    case PresId::R: return r;
    case PresId::A: return a;
    case PresId::RP: return rp;
    case PresId::RPS: return rps;
  }
  fail(Err::BadParameter, "unknown presentation id");
}

const std::vector<PresId>& Presentation::catalog() {
  static const std::vector<PresId> ids = {PresId::PolyST, PresId::PolyX, PresId::PolyAXY,
                                          PresId::R,      PresId::A,     PresId::RP,
                                          PresId::RPS};
  return ids;
}

}  // namespace hw
