#include "eipack/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace eipack {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename F>
auto visit2(const Mat& a, const Mat& b, F&& f) {
  if (a.field() != b.field()) fail(Errc::InvalidInput, "mixed-field operation");
  if (a.is_real()) return f(a.real_mat(), b.real_mat());
  return f(a.complex_mat(), b.complex_mat());
}

}  // namespace

const char* field_name(Field f) { return f == Field::Real ? "R" : "C"; }

void Tolerances::validate() const {
  if (!(rank_rel > 0.0 && rank_rel < 1.0)) fail(Errc::InvalidInput, "rank_rel must lie in (0,1)");
  if (!(residual_abs > 0.0 && residual_abs < 1.0))
    fail(Errc::InvalidInput, "residual_abs must lie in (0,1)");
}

Mat Mat::zeros(Field f, Eigen::Index rows, Eigen::Index cols) {
  if (f == Field::Real) return Mat(Eigen::MatrixXd(Eigen::MatrixXd::Zero(rows, cols)));
  return Mat(Eigen::MatrixXcd(Eigen::MatrixXcd::Zero(rows, cols)));
}

Mat Mat::identity(Field f, Eigen::Index n) {
  if (f == Field::Real) return Mat(Eigen::MatrixXd(Eigen::MatrixXd::Identity(n, n)));
  return Mat(Eigen::MatrixXcd(Eigen::MatrixXcd::Identity(n, n)));
}

Eigen::Index Mat::rows() const {
  return std::visit([](const auto& m) { return m.rows(); }, data_);
}

Eigen::Index Mat::cols() const {
  return std::visit([](const auto& m) { return m.cols(); }, data_);
}

const Eigen::MatrixXd& Mat::real_mat() const {
  if (!is_real()) fail(Errc::InvalidInput, "expected a real matrix");
  return std::get<Eigen::MatrixXd>(data_);
}

const Eigen::MatrixXcd& Mat::complex_mat() const {
  if (is_real()) fail(Errc::InvalidInput, "expected a complex matrix");
  return std::get<Eigen::MatrixXcd>(data_);
}

Eigen::MatrixXcd Mat::to_complex() const {
  if (is_real()) return real_mat().cast<std::complex<double>>();
  return complex_mat();
}

std::complex<double> Mat::at(Eigen::Index i, Eigen::Index j) const {
  if (is_real()) return {real_mat()(i, j), 0.0};
  return complex_mat()(i, j);
}

Mat Mat::adjoint() const {
  if (is_real()) return Mat(Eigen::MatrixXd(real_mat().transpose()));
  return Mat(Eigen::MatrixXcd(complex_mat().adjoint()));
}

Mat Mat::block(Eigen::Index i0, Eigen::Index j0, Eigen::Index p, Eigen::Index q) const {
  if (i0 < 0 || j0 < 0 || p < 0 || q < 0 || i0 + p > rows() || j0 + q > cols())
    fail(Errc::InvalidInput, "block out of range");
  if (is_real()) return Mat(Eigen::MatrixXd(real_mat().block(i0, j0, p, q)));
  return Mat(Eigen::MatrixXcd(complex_mat().block(i0, j0, p, q)));
}

Mat Mat::operator+(const Mat& rhs) const {
  return visit2(*this, rhs, [](const auto& a, const auto& b) {
    using M = std::decay_t<decltype(a)>;
    return Mat(M(a + b));
  });
}

Mat Mat::operator-(const Mat& rhs) const {
  return visit2(*this, rhs, [](const auto& a, const auto& b) {
    using M = std::decay_t<decltype(a)>;
    return Mat(M(a - b));
  });
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols() != rhs.rows()) fail(Errc::InvalidInput, "shape mismatch in product");
  return visit2(*this, rhs, [](const auto& a, const auto& b) {
    using M = std::decay_t<decltype(a)>;
    return Mat(M(a * b));
  });
}

Mat Mat::scaled(double s) const {
  if (is_real()) return Mat(Eigen::MatrixXd(real_mat() * s));
  return Mat(Eigen::MatrixXcd(complex_mat() * s));
}

std::complex<double> Mat::trace() const {
  if (is_real()) return {real_mat().trace(), 0.0};
  return complex_mat().trace();
}

double Mat::max_abs() const {
  if (rows() == 0 || cols() == 0) return 0.0;
  return std::visit([](const auto& m) { return m.cwiseAbs().maxCoeff(); }, data_);
}

double Mat::frobenius_norm() const {
  return std::visit([](const auto& m) { return m.norm(); }, data_);
}

double Mat::op_norm() const {
  if (rows() == 0 || cols() == 0) return 0.0;
  Eigen::VectorXd s = singular_values(*this);
  return s.size() == 0 ? 0.0 : s(0);
}

bool Mat::all_finite() const {
  return std::visit([](const auto& m) { return m.allFinite(); }, data_);
}

double Mat::hermitian_defect() const {
  if (rows() != cols()) fail(Errc::InvalidInput, "hermitian_defect needs a square matrix");
  return (*this - adjoint()).max_abs();
}

double Mat::isometry_defect() const {
  return (adjoint() * *this - identity(field(), cols())).max_abs();
}

Mat hcat(const std::vector<Mat>& parts) {
  if (parts.empty()) fail(Errc::InvalidInput, "hcat of nothing");
  Eigen::Index rows = parts.front().rows(), cols = 0;
  Field f = parts.front().field();
  for (const auto& p : parts) {
    if (p.rows() != rows || p.field() != f) fail(Errc::InvalidInput, "hcat shape/field mismatch");
    cols += p.cols();
  }
  if (f == Field::Real) {
    Eigen::MatrixXd out(rows, cols);
    Eigen::Index c = 0;
    for (const auto& p : parts) {
      out.middleCols(c, p.cols()) = p.real_mat();
      c += p.cols();
    }
    return Mat(std::move(out));
  }
  Eigen::MatrixXcd out(rows, cols);
  Eigen::Index c = 0;
  for (const auto& p : parts) {
    out.middleCols(c, p.cols()) = p.complex_mat();
    c += p.cols();
  }
  return Mat(std::move(out));
}

Mat vcat(const std::vector<Mat>& parts) {
  std::vector<Mat> t;
  t.reserve(parts.size());
  for (const auto& p : parts) t.push_back(p.adjoint());
  return hcat(t).adjoint();
}

Mat kron(const Mat& a, const Mat& b) {
  if (a.field() != b.field()) fail(Errc::InvalidInput, "mixed-field kron");
  auto impl = [](const auto& x, const auto& y) {
    using M = std::decay_t<decltype(x)>;
    M out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j)
        out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return Mat(std::move(out));
  };
  if (a.is_real()) return impl(a.real_mat(), b.real_mat());
  return impl(a.complex_mat(), b.complex_mat());
}

Mat hermitian_part(const Mat& m) {
  if (m.rows() != m.cols()) fail(Errc::InvalidInput, "hermitian_part needs a square matrix");
  return (m + m.adjoint()).scaled(0.5);
}

// One-sided Jacobi throughout: the corner-space certificates need small
// singular values at full relative accuracy, where divide-and-conquer
// kernels smear clustered spectra.
Svd svd(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) fail(Errc::InvalidInput, "svd of an empty matrix");
  if (!a.all_finite()) fail(Errc::InvalidInput, "svd input has non-finite entries");
  if (a.is_real()) {
    Eigen::JacobiSVD<Eigen::MatrixXd> dec(a.real_mat(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {Mat(Eigen::MatrixXd(dec.matrixU())), dec.singularValues(),
            Mat(Eigen::MatrixXd(dec.matrixV()))};
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> dec(a.complex_mat(),
                                         Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {Mat(Eigen::MatrixXcd(dec.matrixU())), dec.singularValues(),
          Mat(Eigen::MatrixXcd(dec.matrixV()))};
}

Eigen::VectorXd singular_values(const Mat& a) {
  if (a.rows() == 0 || a.cols() == 0) return Eigen::VectorXd();
  if (!a.all_finite()) fail(Errc::InvalidInput, "svd input has non-finite entries");
  if (a.is_real()) return Eigen::JacobiSVD<Eigen::MatrixXd>(a.real_mat()).singularValues();
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(a.complex_mat()).singularValues();
}

RankCertificate certified_rank(const Mat& a, const Tolerances& tol) {
  tol.validate();
  Eigen::VectorXd s = singular_values(a);
  const double smax = s.size() ? s(0) : 0.0;
  const double thresh = tol.rank_rel * std::max(smax, 1.0);
  int rank = 0;
  while (rank < s.size() && s(rank) > thresh) ++rank;
  double gap;
  if (rank == 0) {
    gap = (s.size() == 0 || s(0) == 0.0) ? kInf : 1.0 / s(0);
  } else if (rank == s.size()) {
    gap = kInf;
  } else {
    gap = (s(rank) == 0.0) ? kInf : s(rank - 1) / s(rank);
  }
  return {rank, gap};
}

int numerical_rank(const Mat& a, const Tolerances& tol) { return certified_rank(a, tol).rank; }

std::vector<Eigen::VectorXd> null_space(const Mat& a, const Tolerances& tol) {
  if (!a.is_real()) fail(Errc::InvalidInput, "null_space expects a real matrix");
  const Eigen::Index n = a.cols();
  std::vector<Eigen::VectorXd> basis;
  if (a.rows() == 0) {
    for (Eigen::Index k = 0; k < n; ++k) basis.push_back(Eigen::VectorXd::Unit(n, k));
    return basis;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> dec(a.real_mat(), Eigen::ComputeFullV);
  Eigen::VectorXd s = dec.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  const double thresh = tol.rank_rel * std::max(smax, 1.0);
  int rank = 0;
  while (rank < s.size() && s(rank) > thresh) ++rank;
  const Eigen::MatrixXd& v = dec.matrixV();
  for (Eigen::Index k = rank; k < n; ++k) basis.push_back(v.col(k));
  return basis;
}

int herm_dim(Field f, int d) {
  if (d < 1) fail(Errc::InvalidInput, "herm_dim needs d >= 1");
  return f == Field::Real ? d * (d + 1) / 2 : d * d;
}

HermCoords herm_to_coords(const Mat& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) fail(Errc::NotHermitian, "matrix is not square");
  if (m.hermitian_defect() > tol.residual_abs) fail(Errc::NotHermitian, "matrix is not Hermitian");
  const int d = static_cast<int>(m.rows());
  const Field f = m.field();
  const double rt2 = std::sqrt(2.0);
  Eigen::VectorXd c(herm_dim(f, d));
  int k = 0;
  if (f == Field::Real) {
    const auto& x = m.real_mat();
    for (int i = 0; i < d; ++i) c(k++) = x(i, i);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) c(k++) = rt2 * 0.5 * (x(i, j) + x(j, i));
  } else {
    const auto& x = m.complex_mat();
    for (int i = 0; i < d; ++i) c(k++) = x(i, i).real();
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        const std::complex<double> z = 0.5 * (x(i, j) + std::conj(x(j, i)));
        c(k++) = rt2 * z.real();
        c(k++) = rt2 * z.imag();
      }
  }
  return {f, d, std::move(c)};
}

Mat coords_to_herm(const HermCoords& c) {
  const int d = c.d;
  if (d < 1 || c.coords.size() != herm_dim(c.field, d))
    fail(Errc::InvalidInput, "coordinate vector has the wrong length");
  const double inv_rt2 = 1.0 / std::sqrt(2.0);
  int k = 0;
  if (c.field == Field::Real) {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i) x(i, i) = c.coords(k++);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        const double v = inv_rt2 * c.coords(k++);
        x(i, j) = v;
        x(j, i) = v;
      }
    return Mat(std::move(x));
  }
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) x(i, i) = c.coords(k++);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double re = inv_rt2 * c.coords(k++);
      const double im = inv_rt2 * c.coords(k++);
      x(i, j) = {re, im};
      x(j, i) = {re, -im};
    }
  return Mat(std::move(x));
}

namespace {

template <typename M>
Mat complete_impl(const M& phi) {
  const Eigen::Index d = phi.rows(), r = phi.cols();
  M q(d, d);
  q.leftCols(r) = phi;
  Eigen::Index have = r;
  while (have < d) {
    // pick the standard basis vector with the largest residual
    Eigen::Index best = 0;
    double best_norm = -1.0;
    for (Eigen::Index k = 0; k < d; ++k) {
      M e = M::Zero(d, 1);
      e(k, 0) = 1.0;
      M res = e - q.leftCols(have) * (q.leftCols(have).adjoint() * e);
      const double nn = res.norm();
      if (nn > best_norm) {
        best_norm = nn;
        best = k;
      }
    }
    M v = M::Zero(d, 1);
    v(best, 0) = 1.0;
    v -= q.leftCols(have) * (q.leftCols(have).adjoint() * v);
    v -= q.leftCols(have) * (q.leftCols(have).adjoint() * v);  // second pass
    v /= v.norm();
    q.col(have++) = v;
  }
  return Mat(std::move(q));
}

}  // namespace

Mat complete_to_unitary(const Mat& phi, const Tolerances& tol) {
  if (phi.rows() < phi.cols()) fail(Errc::NotIsometry, "more columns than rows");
  if (phi.cols() == 0) fail(Errc::InvalidInput, "cannot complete an empty isometry");
  if (phi.isometry_defect() > tol.residual_abs)
    fail(Errc::NotIsometry, "columns are not orthonormal within tolerance");
  if (phi.is_real()) return complete_impl(phi.real_mat());
  return complete_impl(phi.complex_mat());
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Mat random_gaussian(Field f, Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  if (f == Field::Real) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gaussian(rng);
    return Mat(std::move(m));
  }
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = gaussian(rng);
      const double im = gaussian(rng);
      m(i, j) = {re, im};
    }
  return Mat(std::move(m));
}

namespace {

template <typename M>
Mat haar_impl(const M& g) {
  Eigen::HouseholderQR<M> qr(g);
  M q = qr.householderQ();
  M r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    auto rkk = r(k, k);
    const double a = std::abs(rkk);
    if (a > 0) q.col(k) *= rkk / a;
  }
  return Mat(std::move(q));
}

}  // namespace

Mat random_unitary(Field f, Eigen::Index n, std::mt19937_64& rng) {
  Mat g = random_gaussian(f, n, n, rng);
  if (f == Field::Real) return haar_impl(g.real_mat());
  return haar_impl(g.complex_mat());
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotIsometry: return "NotIsometry";
    case Errc::NotEquiIsoclinic: return "NotEquiIsoclinic";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::NotTight: return "NotTight";
    case Errc::NoComplement: return "NoComplement";
    case Errc::RatioMismatch: return "RatioMismatch";
    case Errc::NotEITFF: return "NotEITFF";
    case Errc::AlphaOne: return "AlphaOne";
    case Errc::UnsupportedDyadicPart: return "UnsupportedDyadicPart";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::BasisTooShort: return "BasisTooShort";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::OutOfScope: return "OutOfScope";
    case Errc::BoundVacuous: return "BoundVacuous";
    case Errc::Unsupported: return "Unsupported";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace eipack
