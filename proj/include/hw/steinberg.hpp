#pragma once

#include <vector>

#include "hw/matrix.hpp"

namespace hw {

/// The rank-1 free-product model of the subgroup of the symplectic Steinberg
/// group generated by the two long-root one-parameter subgroups: only the
/// relation x_b(p)x_b(q) = x_b(p+q) is imposed, so a reduced word (no zero
/// parameters, no adjacent equal roots) is a normal form. Equality proved
/// here implies equality in the Steinberg group, which only adds relations.
enum class Root { PlusAlpha, MinusAlpha };

struct Letter {
  Root root;
  RingElem param;
};

class SteinbergWord {
 public:
  SteinbergWord() = default;
  static SteinbergWord empty(const Presentation& p, const Field& f);
  static SteinbergWord letter(Root r, const RingElem& param);
  /// word_reduce: merges adjacent same-root letters, drops zero parameters.
  static SteinbergWord reduce(const Presentation& p, const Field& f,
                              const std::vector<Letter>& raw);

  bool valid() const { return pres_ != nullptr; }
  const Presentation& pres() const { return *pres_; }
  const Field& field() const { return field_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  SteinbergWord operator*(const SteinbergWord& o) const;
  SteinbergWord inverse() const;
  static SteinbergWord commutator(const SteinbergWord& g, const SteinbergWord& h);

  /// Applies a ring homomorphism to every parameter, then reduces.
  SteinbergWord map(const RingHom& h) const;

  /// Evaluation x_a(p) -> e12(p), x_{-a}(p) -> e21(p).
  Mat eval_sl2() const;

  bool operator==(const SteinbergWord& o) const;
  std::string str() const;

 private:
  const Presentation* pres_ = nullptr;
  Field field_ = Field::f2_rational();
  std::vector<Letter> letters_;
};

/// z = x_a(us) x_{-a}(u^-1 t) x_a((1+u)s) x_{-a}(t) x_a(s) x_{-a}((1+u^-1)t)
/// over k[s,t].
SteinbergWord z_word(const Field& f, const FieldElem& u);

/// The three commutators g1 = [x_a(us), x_{-a}(u^-1 t)],
/// g2 = [x_{-a}(u^-1 t), x_a(s)], g3 = [x_a(s), x_{-a}((1+u^-1)t)].
std::vector<SteinbergWord> z_commutators(const Field& f, const FieldElem& u);

struct WordIdentityResult {
  bool ok;
  SteinbergWord residual;  // empty iff ok
};

/// Verifies z = g1 g2 g3 in the free-product model by reducing
/// z * (g1 g2 g3)^-1 to the empty word.
WordIdentityResult check_lemma_z_commutators(const Field& f, const FieldElem& u);

/// Same check with one parameter of z perturbed (multiplied by u); expected
/// to leave a nonempty residual.
WordIdentityResult check_lemma_z_commutators_mutated(const Field& f, const FieldElem& u);

}  // namespace hw
