#pragma once

#include <vector>

#include "hw/hom.hpp"
#include "hw/ring.hpp"

namespace hw {

/// Dense matrix of ring elements over one presentation. Indices in the public
/// API are 1-based, matching the e_ij naming of elementary matrices.
class Mat {
 public:
  Mat() = default;
  static Mat zero(const Presentation& p, const Field& f, int rows, int cols);
  static Mat identity(const Presentation& p, const Field& f, int n);
  /// I + r in position (i,j), i != j.
  static Mat elementary(const Presentation& p, const Field& f, int n, int i, int j,
                        const RingElem& r);
  static Mat from_rows(const Presentation& p, const Field& f,
                       std::vector<std::vector<RingElem>> rows);
  /// Column vector.
  static Mat column(const Presentation& p, const Field& f, std::vector<RingElem> entries);

  bool valid() const { return pres_ != nullptr; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Presentation& pres() const { return *pres_; }
  const Field& field() const { return field_; }

  const RingElem& at(int i, int j) const;  // 1-based
  void set(int i, int j, RingElem v);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat transpose() const;
  RingElem det() const;  // cofactor expansion, n <= 6
  bool operator==(const Mat& o) const;
  bool is_identity() const;

  /// Applies a hom entrywise (entries must live in h's source).
  Mat map(const RingHom& h) const;

  std::string str() const;

 private:
  const Presentation* pres_ = nullptr;
  Field field_ = Field::f2_rational();
  int rows_ = 0, cols_ = 0;
  std::vector<RingElem> e_;
};

/// The standard alternating form: block diagonal of (0 1; -1 0).
Mat symplectic_form(const Presentation& p, const Field& f, int n);
/// Mt * chi * M == chi; throws OddDimension for odd n.
bool is_symplectic(const Mat& m);

/// One elementary factor e_{ij}(r); the certificate's product is taken in
/// list order (left to right).
struct ElemFactor {
  int i, j;
  RingElem r;
};

struct ElementaryCertificate {
  Mat target;
  std::vector<ElemFactor> factors;

  Mat product() const;
  bool verify() const { return product() == target; }
  /// Syntactic inverse: reversed factors with negated parameters.
  std::vector<ElemFactor> inverse_factors() const;
};

Mat product_of(const Presentation& p, const Field& f, int n,
               const std::vector<ElemFactor>& factors);

// --- the concrete matrices -------------------------------------------------

/// The 2x2 matrix over R with first row (1+(1+u)a^2, (1+u)(1+a)y); requires
/// u and 1+u to be units (u not 0 or 1).
Mat build_m0(const Field& f, const FieldElem& u);
/// build_m0(u) * e21((1+u^-1)x); same symplectic K1 class as M0(u).
Mat build_m(const Field& f, const FieldElem& u);

/// The six-factor elementary certificate for psi(M(u)) over k[s,t]:
/// e12(us) e21(u^-1 t) e12((1+u)s) e21(t) e12(s) e21((1+u^-1)t).
ElementaryCertificate psi_m_factorization(const Field& f, const FieldElem& u);

}  // namespace hw
