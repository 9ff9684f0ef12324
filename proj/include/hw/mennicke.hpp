#pragma once

#include <string>
#include <vector>

#include "hw/matrix.hpp"

namespace hw {

/// Mennicke symbol [a,b] of a unimodular row, carried together with a chosen
/// SL2 completion whose first row is (a,b). Orientation fixed: completion row
/// one is (a,b). Construction machine-checks det = 1 and the first row.
struct MennickeSymbol {
  RingElem a, b;
  Mat completion;  // 2x2, det 1, row 1 = (a, b)

  MennickeSymbol(RingElem a_, RingElem b_, Mat completion_);
};

/// Symbol together with an elementary certificate for diag(completion, 1).
struct SymbolCert {
  MennickeSymbol sym;
  ElementaryCertificate cert;  // target = diag(completion, 1), verified
};

Mat diag3(const Mat& c2);  // diag(c2, 1) for a 2x2 matrix

struct ShiftWitness {
  std::vector<ElemFactor> left, right;  // new = (prod left) * old * (prod right)
};

enum class ShiftSlot { First, Second };

/// [a,b] -> [a+t*b, b] (First) or [a, b+t*a] (Second); the new completion is
/// the old one times a single column operation, returned as the witness.
std::pair<MennickeSymbol, ShiftWitness> symbol_shift(const MennickeSymbol& sym, ShiftSlot slot,
                                                     const RingElem& t);

/// Multiplicativity in the second argument: from certified symbols [a,b] and
/// [a,b'] produces a certified [a, b*b']. The emitted certificate is
/// assembled from the two input certificates plus explicit elementary
/// factors and is re-verified by multiplication.
SymbolCert symbol_mult_second(const SymbolCert& s1, const SymbolCert& s2);

/// Elementary factorization of diag(completion, 1) when a or b is a verified
/// unit (Gaussian elimination on a unit pivot; diag(a, a^-1) enters through
/// the Whitehead factorization).
ElementaryCertificate symbol_unit_certificate(const MennickeSymbol& sym);

/// Factors L with (prod L) * M = M2 for two SL2 matrices with the same first
/// row; empty when M = M2. The single factor is e21 of the adjugate form
/// lambda = d*c2 + c*d2.
std::vector<ElemFactor> completion_shift(const Mat& m, const Mat& m2);

struct ChainStep {
  std::string name;
  bool ok;
  std::string detail;
};

struct ChainResult {
  ElementaryCertificate cert;  // target = diag(M0(u), 1) over R
  std::vector<ChainStep> steps;
  bool ok() const;
  std::string note;  // flags the corrected chain identity reading
};

/// Runs the certified symbol chain for [1+(1+u)a^2, (1+u)(1+a)y] with
/// completion M0(u): split the second entry into (1+u) * y * (1+a), certify
/// each factor symbol (unit certificates and shifts), recombine by
/// multiplicativity, and bridge the resulting completion back to M0(u).
/// Verifies the chain's ring identities along the way, including
/// (1+u)(1+a)^2 = (1+u)(1+a^2) and 1+(1+u)a^2+(1+u)(1+a^2) = u.
ChainResult run_lemma21_chain(const Field& f, const FieldElem& u);

}  // namespace hw
