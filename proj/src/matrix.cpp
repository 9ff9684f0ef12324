#include "hw/matrix.hpp"

#include <sstream>

namespace hw {

Mat Mat::zero(const Presentation& p, const Field& f, int rows, int cols) {
  if (rows < 1 || cols < 1 || rows > 6 || cols > 6)
    fail(Err::DimensionMismatch, "dimensions must be in 1..6");
  Mat m;
  m.pres_ = &p;
  m.field_ = f;
  m.rows_ = rows;
  m.cols_ = cols;
  m.e_.assign(static_cast<std::size_t>(rows * cols), RingElem::zero(p, f));
  return m;
}

Mat Mat::identity(const Presentation& p, const Field& f, int n) {
  Mat m = zero(p, f, n, n);
  for (int i = 1; i <= n; ++i) m.set(i, i, RingElem::one(p, f));
  return m;
}

Mat Mat::elementary(const Presentation& p, const Field& f, int n, int i, int j,
                    const RingElem& r) {
  if (i == j) fail(Err::BadIndex, "elementary matrix needs i != j");
  if (i < 1 || i > n || j < 1 || j > n) fail(Err::BadIndex, "index out of range");
  Mat m = identity(p, f, n);
  m.set(i, j, r);
  return m;
}

Mat Mat::from_rows(const Presentation& p, const Field& f,
                   std::vector<std::vector<RingElem>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Mat m = zero(p, f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      fail(Err::DimensionMismatch, "ragged rows");
    for (int j = 0; j < c; ++j) m.set(i + 1, j + 1, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

Mat Mat::column(const Presentation& p, const Field& f, std::vector<RingElem> entries) {
  Mat m = zero(p, f, static_cast<int>(entries.size()), 1);
  for (int i = 0; i < m.rows_; ++i) m.set(i + 1, 1, entries[static_cast<std::size_t>(i)]);
  return m;
}

const RingElem& Mat::at(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) fail(Err::BadIndex, "matrix index out of range");
  return e_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
}

void Mat::set(int i, int j, RingElem v) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) fail(Err::BadIndex, "matrix index out of range");
  if (!same_presentation(v.pres(), *pres_))
    fail(Err::PresentationMismatch, "entry from a different presentation");
  e_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))] = std::move(v);
}

namespace {
void require_same_space(const Mat& a, const Mat& b) {
  if (!a.valid() || !b.valid()) fail(Err::BadParameter, "detached matrix");
  if (!same_presentation(a.pres(), b.pres()))
    fail(Err::PresentationMismatch, a.pres().name() + " vs " + b.pres().name());
}
}  // namespace

Mat Mat::operator*(const Mat& o) const {
  require_same_space(*this, o);
  if (cols_ != o.rows_) fail(Err::DimensionMismatch, "inner dimensions differ");
  Mat out = zero(*pres_, field_, rows_, o.cols_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= o.cols_; ++j) {
      RingElem acc = RingElem::zero(*pres_, field_);
      for (int k = 1; k <= cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
      out.set(i, j, std::move(acc));
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  require_same_space(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(Err::DimensionMismatch, "shape mismatch");
  Mat out = zero(*pres_, field_, rows_, cols_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) out.set(i, j, at(i, j) + o.at(i, j));
  return out;
}

Mat Mat::transpose() const {
  Mat out = zero(*pres_, field_, cols_, rows_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

RingElem Mat::det() const {
  if (rows_ != cols_) fail(Err::DimensionMismatch, "determinant of a non-square matrix");
  if (rows_ == 1) return at(1, 1);
  // Cofactor expansion along the first row; rings here are not fields, and
  // n <= 6 keeps this exact and cheap. Signs are immaterial in char 2.
  RingElem acc = RingElem::zero(*pres_, field_);
  for (int j = 1; j <= cols_; ++j) {
    if (at(1, j).is_zero()) continue;
    Mat minor = zero(*pres_, field_, rows_ - 1, cols_ - 1);
    for (int i = 2; i <= rows_; ++i) {
      int cc = 1;
      for (int jj = 1; jj <= cols_; ++jj) {
        if (jj == j) continue;
        minor.set(i - 1, cc++, at(i, jj));
      }
    }
    acc = acc + at(1, j) * minor.det();
  }
  return acc;
}

bool Mat::operator==(const Mat& o) const {
  if (!valid() || !o.valid()) return valid() == o.valid();
  if (pres_ != o.pres_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!(e_[i] == o.e_[i])) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(*pres_, field_, rows_);
}

Mat Mat::map(const RingHom& h) const {
  Mat out = zero(h.target(), field_, rows_, cols_);
  for (int i = 1; i <= rows_; ++i)
    for (int j = 1; j <= cols_; ++j) out.set(i, j, h(at(i, j)));
  return out;
}

std::string Mat::str() const {
  std::ostringstream out;
  out << "[";
  for (int i = 1; i <= rows_; ++i) {
    out << (i > 1 ? "; " : "");
    for (int j = 1; j <= cols_; ++j) out << (j > 1 ? ", " : "") << at(i, j).str();
  }
  out << "]";
  return out.str();
}

Mat symplectic_form(const Presentation& p, const Field& f, int n) {
  if (n % 2) fail(Err::OddDimension, "the alternating form needs even dimension");
  Mat chi = Mat::zero(p, f, n, n);
  RingElem one = RingElem::one(p, f);
  for (int b = 0; b < n / 2; ++b) {
    chi.set(2 * b + 1, 2 * b + 2, one);
    chi.set(2 * b + 2, 2 * b + 1, one.neg());  // -1 = 1 in char 2
  }
  return chi;
}

bool is_symplectic(const Mat& m) {
  if (m.rows() != m.cols()) fail(Err::DimensionMismatch, "non-square matrix");
  if (m.rows() % 2) fail(Err::OddDimension, "odd dimension");
  Mat chi = symplectic_form(m.pres(), m.field(), m.rows());
  return m.transpose() * chi * m == chi;
}

Mat product_of(const Presentation& p, const Field& f, int n,
               const std::vector<ElemFactor>& factors) {
  Mat acc = Mat::identity(p, f, n);
  for (const ElemFactor& fac : factors) {
    // acc *= e_ij(r): column j gains r * column i.
    for (int row = 1; row <= n; ++row)
      acc.set(row, fac.j, acc.at(row, fac.j) + acc.at(row, fac.i) * fac.r);
  }
  return acc;
}

Mat ElementaryCertificate::product() const {
  return product_of(target.pres(), target.field(), target.rows(), factors);
}

std::vector<ElemFactor> ElementaryCertificate::inverse_factors() const {
  std::vector<ElemFactor> out;
  out.reserve(factors.size());
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    out.push_back({it->i, it->j, it->r.neg()});
  return out;
}

// --- concrete matrices ------------------------------------------------------

namespace {
void require_u(const Field& f, const FieldElem& u) {
  if (u.is_zero() || u.is_one())
    fail(Err::BadParameter, "u and 1+u must be units (u outside {0,1})");
  if (!(u.field() == f)) fail(Err::FieldMismatch, "u is not an element of " + f.str());
}
}  // namespace

Mat build_m0(const Field& f, const FieldElem& u) {
  require_u(f, u);
  const Presentation& R = Presentation::get(PresId::R);
  FieldElem one = FieldElem::one(f);
  RingElem a = RingElem::generator(R, f, "a");
  RingElem x = RingElem::generator(R, f, "x");
  RingElem y = RingElem::generator(R, f, "y");
  RingElem id = RingElem::one(R, f);
  RingElem opa = id + a;  // 1+a
  return Mat::from_rows(
      R, f,
      {{id + a.pow(2) * (one + u), opa * y * (one + u)},
       {opa * x * (one + u.inv()), id + a.pow(2) * (one + u.inv())}});
}

Mat build_m(const Field& f, const FieldElem& u) {
  const Presentation& R = Presentation::get(PresId::R);
  RingElem x = RingElem::generator(R, f, "x");
  FieldElem one = FieldElem::one(f);
  return build_m0(f, u) * Mat::elementary(R, f, 2, 2, 1, x * (one + u.inv()));
}

ElementaryCertificate psi_m_factorization(const Field& f, const FieldElem& u) {
  require_u(f, u);
  const Presentation& ST = Presentation::get(PresId::PolyST);
  RingElem s = RingElem::generator(ST, f, "s");
  RingElem t = RingElem::generator(ST, f, "t");
  FieldElem one = FieldElem::one(f);
  StandardHoms homs = StandardHoms::build(f);
  ElementaryCertificate cert;
  cert.target = build_m(f, u).map(homs.psi);
  cert.factors = {{1, 2, s * u},         {2, 1, t * u.inv()}, {1, 2, s * (one + u)},
                  {2, 1, t},             {1, 2, s},           {2, 1, t * (one + u.inv())}};
  if (!cert.verify()) {
    Mat prod = cert.product();
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        if (!(prod.at(i, j) == cert.target.at(i, j)))
          fail(Err::VerifyFailed, "six-factor product differs at entry (" + std::to_string(i) +
                                      "," + std::to_string(j) + "): " + prod.at(i, j).str() +
                                      " vs " + cert.target.at(i, j).str());
  }
  return cert;
}

}  // namespace hw
