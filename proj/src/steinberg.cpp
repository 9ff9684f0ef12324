#include "hw/steinberg.hpp"

#include <sstream>

namespace hw {

SteinbergWord SteinbergWord::empty(const Presentation& p, const Field& f) {
  SteinbergWord w;
  w.pres_ = &p;
  w.field_ = f;
  return w;
}

SteinbergWord SteinbergWord::letter(Root r, const RingElem& param) {
  return reduce(param.pres(), param.field(), {{r, param}});
}

SteinbergWord SteinbergWord::reduce(const Presentation& p, const Field& f,
                                    const std::vector<Letter>& raw) {
  SteinbergWord w = empty(p, f);
  for (const Letter& l : raw) {
    if (!same_presentation(l.param.pres(), p))
      fail(Err::PresentationMismatch, "letter parameter not in " + p.name());
    if (l.param.is_zero()) continue;
    if (!w.letters_.empty() && w.letters_.back().root == l.root) {
      // Roots below the top already alternate, so one merge suffices.
      RingElem merged = w.letters_.back().param + l.param;
      w.letters_.pop_back();
      if (!merged.is_zero()) w.letters_.push_back({l.root, std::move(merged)});
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

SteinbergWord SteinbergWord::operator*(const SteinbergWord& o) const {
  if (!valid() || !o.valid()) fail(Err::BadParameter, "detached word");
  if (!same_presentation(*pres_, *o.pres_))
    fail(Err::PresentationMismatch, pres_->name() + " vs " + o.pres_->name());
  std::vector<Letter> raw = letters_;
  raw.insert(raw.end(), o.letters_.begin(), o.letters_.end());
  return reduce(*pres_, field_, raw);
}

SteinbergWord SteinbergWord::inverse() const {
  std::vector<Letter> raw;
  raw.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    raw.push_back({it->root, it->param.neg()});
  return reduce(*pres_, field_, raw);
}

SteinbergWord SteinbergWord::commutator(const SteinbergWord& g, const SteinbergWord& h) {
  return g * h * g.inverse() * h.inverse();
}

SteinbergWord SteinbergWord::map(const RingHom& h) const {
  std::vector<Letter> raw;
  raw.reserve(letters_.size());
  for (const Letter& l : letters_) raw.push_back({l.root, h(l.param)});
  return reduce(h.target(), field_, raw);
}

Mat SteinbergWord::eval_sl2() const {
  Mat acc = Mat::identity(*pres_, field_, 2);
  for (const Letter& l : letters_) {
    int i = l.root == Root::PlusAlpha ? 1 : 2;
    int j = 3 - i;
    acc = acc * Mat::elementary(*pres_, field_, 2, i, j, l.param);
  }
  return acc;
}

bool SteinbergWord::operator==(const SteinbergWord& o) const {
  if (pres_ != o.pres_ || letters_.size() != o.letters_.size()) return false;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].root != o.letters_[i].root || !(letters_[i].param == o.letters_[i].param))
      return false;
  return true;
}

std::string SteinbergWord::str() const {
  if (letters_.empty()) return "e";
  std::ostringstream out;
  for (const Letter& l : letters_)
    out << (l.root == Root::PlusAlpha ? "x+(" : "x-(") << l.param.str() << ")";
  return out.str();
}

namespace {

std::vector<RingElem> z_params(const Field& f, const FieldElem& u) {
  const Presentation& ST = Presentation::get(PresId::PolyST);
  RingElem s = RingElem::generator(ST, f, "s");
  RingElem t = RingElem::generator(ST, f, "t");
  FieldElem one = FieldElem::one(f);
  return {s * u, t * u.inv(), s * (one + u), t, s, t * (one + u.inv())};
}

}  // namespace

SteinbergWord z_word(const Field& f, const FieldElem& u) {
  if (u.is_zero() || u.is_one()) fail(Err::BadParameter, "u must lie outside {0,1}");
  auto ps = z_params(f, u);
  const Presentation& ST = Presentation::get(PresId::PolyST);
  std::vector<Letter> raw;
  for (std::size_t i = 0; i < ps.size(); ++i)
    raw.push_back({i % 2 == 0 ? Root::PlusAlpha : Root::MinusAlpha, ps[i]});
  return SteinbergWord::reduce(ST, f, raw);
}

std::vector<SteinbergWord> z_commutators(const Field& f, const FieldElem& u) {
  auto ps = z_params(f, u);
  auto X = [&](const RingElem& p) { return SteinbergWord::letter(Root::PlusAlpha, p); };
  auto Y = [&](const RingElem& p) { return SteinbergWord::letter(Root::MinusAlpha, p); };
  SteinbergWord g1 = SteinbergWord::commutator(X(ps[0]), Y(ps[1]));  // [x(us), y(u^-1 t)]
  SteinbergWord g2 = SteinbergWord::commutator(Y(ps[1]), X(ps[4]));  // [y(u^-1 t), x(s)]
  SteinbergWord g3 = SteinbergWord::commutator(X(ps[4]), Y(ps[5]));  // [x(s), y((1+u^-1)t)]
  return {g1, g2, g3};
}

WordIdentityResult check_lemma_z_commutators(const Field& f, const FieldElem& u) {
  SteinbergWord z = z_word(f, u);
  auto gs = z_commutators(f, u);
  SteinbergWord residual = z * (gs[0] * gs[1] * gs[2]).inverse();
  return {residual.is_empty(), residual};
}

WordIdentityResult check_lemma_z_commutators_mutated(const Field& f, const FieldElem& u) {
  SteinbergWord z = z_word(f, u);
  std::vector<Letter> letters = z.letters();
  letters.front().param = letters.front().param * u;  // x(us) becomes x(u^2 s)
  SteinbergWord zbad = SteinbergWord::reduce(z.pres(), f, letters);
  auto gs = z_commutators(f, u);
  SteinbergWord residual = zbad * (gs[0] * gs[1] * gs[2]).inverse();
  return {residual.is_empty(), residual};
}

}  // namespace hw
