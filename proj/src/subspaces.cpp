#include "eipack/subspaces.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eipack {

SubspaceSequence::SubspaceSequence(Field field, int d, int r, std::vector<Mat> isometries,
                                   const Tolerances& tol)
    : field_(field), d_(d), r_(r), isometries_(std::move(isometries)) {
  tol.validate();
  if (d < 1 || r < 1 || r > d) fail(Errc::InvalidInput, "need 1 <= r <= d");
  if (isometries_.empty()) fail(Errc::InvalidInput, "need at least one subspace");
  for (const auto& phi : isometries_) {
    if (phi.field() != field_) fail(Errc::InvalidInput, "isometry field mismatch");
    if (phi.rows() != d_ || phi.cols() != r_) fail(Errc::InvalidInput, "isometry shape mismatch");
    if (!phi.all_finite()) fail(Errc::InvalidInput, "isometry has non-finite entries");
    if (phi.isometry_defect() > tol.residual_abs)
      fail(Errc::NotIsometry, "columns are not orthonormal within tolerance");
  }
}

Mat SubspaceSequence::projection(int j) const {
  const Mat& phi = isometries_.at(j);
  return phi * phi.adjoint();
}

Mat SubspaceSequence::synthesis() const { return hcat(isometries_); }

namespace {

// Lexicographic tie-break between A and A* so swapped arguments feed the
// identical matrix to the factorization; the spectra agree either way.
const Mat& canonical_of_pair(const Mat& a, const Mat& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const std::complex<double> x = a.at(i, j), y = b.at(i, j);
      if (x.real() != y.real()) return x.real() < y.real() ? a : b;
      if (x.imag() != y.imag()) return x.imag() < y.imag() ? a : b;
    }
  return a;
}

}  // namespace

PrincipalAngles principal_angles(const Mat& phi, const Mat& psi) {
  if (phi.field() != psi.field() || phi.rows() != psi.rows() || phi.cols() != psi.cols())
    fail(Errc::InvalidInput, "principal angles need isometries of equal shape and field");
  Mat prod = phi.adjoint() * psi;
  Mat swapped = prod.adjoint();
  Eigen::VectorXd s = singular_values(canonical_of_pair(prod, swapped));
  PrincipalAngles out;
  out.angles.reserve(s.size());
  for (Eigen::Index k = s.size() - 1; k >= 0; --k) {
    const double c = std::clamp(s(k), 0.0, 1.0);
    out.angles.push_back(std::acos(c));
  }
  return out;
}

double block_coherence(const SubspaceSequence& s) {
  if (s.n() < 2) fail(Errc::InvalidInput, "block coherence needs n >= 2");
  double mu = 0.0;
  for (int i = 0; i < s.n(); ++i)
    for (int j = i + 1; j < s.n(); ++j)
      mu = std::max(mu, (s.isometry(i).adjoint() * s.isometry(j)).op_norm());
  return std::clamp(mu, 0.0, 1.0);
}

EiCheck ei_check(const SubspaceSequence& s, const Tolerances& tol) {
  tol.validate();
  if (s.n() < 2) fail(Errc::InvalidInput, "equi-isoclinism needs n >= 2");
  double lo = 2.0, hi = -1.0, worst_pair = 0.0, sum = 0.0;
  int pairs = 0;
  for (int i = 0; i < s.n(); ++i)
    for (int j = i + 1; j < s.n(); ++j) {
      Eigen::VectorXd sv = singular_values(s.isometry(i).adjoint() * s.isometry(j));
      worst_pair = std::max(worst_pair, sv(0) - sv(sv.size() - 1));
      const double mean = sv.mean();
      lo = std::min(lo, mean);
      hi = std::max(hi, mean);
      sum += mean;
      ++pairs;
    }
  EiCheck out;
  out.spread = std::max(worst_pair, hi - lo);
  if (out.spread <= tol.residual_abs) out.alpha = std::clamp(sum / pairs, 0.0, 1.0);
  return out;
}

std::optional<double> is_equi_isoclinic(const SubspaceSequence& s, const Tolerances& tol) {
  return ei_check(s, tol).alpha;
}

NormalizedEI normalize_ei(const SubspaceSequence& s, double alpha, const Tolerances& tol) {
  tol.validate();
  if (s.n() < 2) fail(Errc::InvalidInput, "normalization needs n >= 2");
  if (s.d() < 2 * s.r()) fail(Errc::DimensionTooSmall, "need d >= 2r");
  if (!(alpha >= 0.0 && alpha < 1.0))
    fail(Errc::NotEquiIsoclinic, "isoclinism parameter must lie in [0,1)");
  EiCheck chk = ei_check(s, tol);
  if (!chk.alpha) fail(Errc::NotEquiIsoclinic, "sequence is not equi-isoclinic within tolerance");
  if (std::abs(*chk.alpha - alpha) > 100.0 * tol.residual_abs)
    fail(Errc::NotEquiIsoclinic, "measured parameter " + std::to_string(*chk.alpha) +
                                     " does not match requested " + std::to_string(alpha));

  const int d = s.d(), r = s.r(), n = s.n();
  const Field f = s.field();
  const double beta = std::sqrt(1.0 - alpha * alpha);

  // Left unitary sending the first subspace to the span of e_1..e_r.
  Mat v = complete_to_unitary(s.isometry(0), tol).adjoint();
  std::vector<Mat> work;
  work.reserve(n);
  for (int j = 0; j < n; ++j) {
    Mat t = v * s.isometry(j);
    if (j > 0 && alpha != 0.0) {
      Mat z = (s.isometry(0).adjoint() * s.isometry(j)).adjoint().scaled(1.0 / alpha);
      t = t * z;
    }
    work.push_back(std::move(t));
  }

  // Block unitary flattening the second isometry below its top block.
  Mat bc = work[1].block(r, 0, d - r, r).scaled(1.0 / beta);
  Mat w = complete_to_unitary(bc, tol).adjoint();
  std::vector<Mat> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) {
    Mat top = work[j].block(0, 0, r, r);
    Mat bottom = w * work[j].block(r, 0, d - r, r);
    out.push_back(vcat({top, bottom}));
  }

  NormalizedEI result{SubspaceSequence(f, d, r, out, tol), alpha, beta, {}, {}, {}};

  const Mat id_r = Mat::identity(f, r);
  const double shape_tol = tol.residual_abs;
  if ((out[0].block(0, 0, r, r) - id_r).max_abs() > shape_tol ||
      out[0].block(r, 0, d - r, r).max_abs() > shape_tol)
    fail(Errc::InternalInconsistency, "first isometry did not normalize to [I;0]");
  if ((out[1].block(0, 0, r, r) - id_r.scaled(alpha)).max_abs() > shape_tol ||
      (out[1].block(r, 0, r, r) - id_r.scaled(beta)).max_abs() > shape_tol ||
      (d > 2 * r && out[1].block(2 * r, 0, d - 2 * r, r).max_abs() > shape_tol))
    fail(Errc::InternalInconsistency, "second isometry did not normalize to [aI;bI;0]");

  for (int j = 2; j < n; ++j) {
    Mat xj = out[j].block(r, 0, r, r);
    Mat yj = out[j].block(2 * r, 0, d - 2 * r, r);
    if ((out[j].block(0, 0, r, r) - id_r.scaled(alpha)).max_abs() > shape_tol)
      fail(Errc::InternalInconsistency, "top block did not normalize to aI");
    if (alpha != 0.0) {
      Mat uj = id_r.scaled(alpha) + xj.scaled(beta / alpha);
      if (uj.isometry_defect() > shape_tol)
        fail(Errc::InternalInconsistency, "derived U_j is not unitary");
      if ((xj.adjoint() * xj - xj * xj.adjoint()).max_abs() > shape_tol)
        fail(Errc::InternalInconsistency, "derived X_j is not normal");
      if (numerical_rank(xj, tol) != r)
        fail(Errc::InternalInconsistency, "derived X_j is singular");
      const double b2 = 1.0 - alpha * alpha;
      Mat expect = id_r.scaled((1.0 - 3.0 * alpha * alpha) / b2) +
                   (uj + uj.adjoint()).scaled(std::pow(alpha, 3) / b2);
      if ((yj.adjoint() * yj - expect).max_abs() > shape_tol)
        fail(Errc::InternalInconsistency, "Y_j*Y_j does not satisfy the normal form relation");
      result.u.push_back(std::move(uj));
    }
    result.x.push_back(std::move(xj));
    result.y.push_back(std::move(yj));
  }
  return result;
}

SubspaceSequence construct_ei3(int d, int r, double alpha, const Tolerances& tol) {
  if (r < 1 || !(2 * r < d && d < 3 * r))
    fail(Errc::InvalidInput, "construction needs 2r < d < 3r");
  if (!(alpha >= 0.5 && alpha < 1.0)) fail(Errc::InvalidInput, "construction needs 1/2 <= alpha < 1");

  const double a2 = alpha * alpha, a3 = a2 * alpha;
  const double beta = std::sqrt(1.0 - a2);
  const double x1 = (3.0 * a2 - 1.0) / (2.0 * a3);
  // Free parameter placing x2 at the midpoint (x1 + 1)/2.
  const double c2 = a3 * (1.0 - x1) / (1.0 - a2);
  const double c = std::sqrt(c2);
  const double x2 = x1 + c2 * (1.0 - a2) / (2.0 * a3);
  const std::complex<double> l1{x1, std::sqrt(std::max(0.0, 1.0 - x1 * x1))};
  const std::complex<double> l2{x2, std::sqrt(std::max(0.0, 1.0 - x2 * x2))};

  const int p = d - 2 * r;  // bottom block height
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(r, r);
  for (int i = 0; i < p; ++i) u(i, i) = l2;
  for (int i = p; i < r; ++i) u(i, i) = l1;

  Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(p, r);
  for (int i = 0; i < p; ++i) y(i, i) = c;

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(r, r);
  Eigen::MatrixXcd phi1(d, r), phi2(d, r), phi3(d, r);
  phi1 << id, Eigen::MatrixXcd::Zero(r, r), Eigen::MatrixXcd::Zero(p, r);
  phi2 << alpha * id, beta * id, Eigen::MatrixXcd::Zero(p, r);
  phi3 << alpha * id, (alpha / beta) * u - (a2 / beta) * id, y;

  return SubspaceSequence(Field::Complex, d, r,
                          {Mat(std::move(phi1)), Mat(std::move(phi2)), Mat(std::move(phi3))}, tol);
}

int common_span_dim(const SubspaceSequence& s, const Tolerances& tol) {
  return numerical_rank(s.synthesis(), tol);
}

std::optional<OddAmbientWitness> eitff_2rplus1_exists(int r) {
  if (r < 1 || r % 2 != 0) fail(Errc::InvalidInput, "the criterion applies to even r only");
  // Tightness in R^{2r+1} forces parameter 1/2 and hence n = (6r+3)/(2r-1).
  const long long num = 6LL * r + 3, den = 2LL * r - 1;
  if (num % den != 0) return std::nullopt;
  return OddAmbientWitness{r, static_cast<int>(num / den)};
}

}  // namespace eipack
