#include "hw/parse.hpp"

#include <cctype>
#include <cstdlib>

namespace hw {

Field parse_field_spec(std::string_view spec) {
  if (spec == "f2-rational") return Field::f2_rational();
  if (spec.starts_with("gf2:")) {
    std::string s(spec.substr(4));
    auto colon = s.find(':');
    if (colon == std::string::npos)
      fail(Err::ParseError, "expected gf2:<n>:<modulus-bits>, got " + std::string(spec));
    int n = std::atoi(s.substr(0, colon).c_str());
    std::string bits = s.substr(colon + 1);
    Gf2Poly m = Gf2Poly::from_bit_string(bits);
    std::uint64_t mod = 0;
    for (int i = 0; i <= m.degree(); ++i)
      if (m.coeff(i)) mod |= std::uint64_t(1) << i;
    return Field::gf2n(n, mod);
  }
  fail(Err::ParseError, "unknown field spec " + std::string(spec) +
                            " (expected f2-rational or gf2:<n>:<bits>)");
}

namespace {

class Parser {
 public:
  Parser(const Presentation& p, const Field& f, std::string_view in)
      : pres_(p), field_(f), in_(in) {}

  RingElem run() {
    RingElem e = expr();
    skip_ws();
    if (pos_ != in_.size()) bail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void bail(const std::string& msg) {
    fail(Err::ParseError, msg + " at position " + std::to_string(pos_) + " in \"" +
                              std::string(in_) + "\"");
  }

  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < in_.size() && in_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < in_.size() ? in_[pos_] : '\0';
  }

  RingElem expr() {
    RingElem acc = term();
    for (;;) {
      // char 2: '-' and '+' coincide
      if (eat('+') || eat('-'))
        acc = acc + term();
      else
        return acc;
    }
  }

  RingElem term() {
    RingElem acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        RingElem d = factor();
        auto inv = try_ring_inverse(d);
        if (!inv) {
          pos_ = at;
          bail("division by a non-unit (" + d.str() + ")");
        }
        acc = acc * *inv;
      } else {
        return acc;
      }
    }
  }

  RingElem factor() {
    RingElem base = atom();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_])))
        bail("expected an integer exponent");
      unsigned e = 0;
      while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
        e = e * 10 + static_cast<unsigned>(in_[pos_] - '0');
        if (e > 4096) bail("exponent too large");
        ++pos_;
      }
      return base.pow(e);
    }
    return base;
  }

  RingElem atom() {
    skip_ws();
    if (pos_ >= in_.size()) bail("unexpected end of input");
    char c = in_[pos_];
    if (c == '(') {
      ++pos_;
      RingElem e = expr();
      if (!eat(')')) bail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t n = 0;
      while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) {
        n = n * 10 + static_cast<std::uint64_t>(in_[pos_] - '0');
        ++pos_;
      }
      return RingElem::scalar(pres_, FieldElem::integer(field_, n));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < in_.size() &&
             (std::isalnum(static_cast<unsigned char>(in_[pos_])) || in_[pos_] == '_'))
        ++pos_;
      std::string name(in_.substr(start, pos_ - start));
      int v = pres_.var_index(name);
      if (v >= 0) return RingElem::generator(pres_, field_, v);
      if (name == "u" || name == "w")
        return RingElem::scalar(pres_, FieldElem::gen(field_));
      pos_ = start;
      bail("unknown name '" + name + "'");
    }
    bail(std::string("unexpected character '") + c + "'");
  }

  const Presentation& pres_;
  Field field_;
  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElem parse_element(const Presentation& p, const Field& f, std::string_view input) {
  return Parser(p, f, input).run();
}

FieldElem parse_scalar(const Field& f, std::string_view input) {
  return parse_element(Presentation::get(PresId::K), f, input).constant_term();
}

}  // namespace hw
