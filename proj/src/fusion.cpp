#include "eipack/fusion.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace eipack {

Mat FusionGram::as_matrix() const {
  std::vector<Mat> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) rows.push_back(hcat(blocks[i]));
  return vcat(rows);
}

FusionGram fusion_gram(const SubspaceSequence& s) {
  FusionGram g{s.field(), s.r(), s.n(), {}};
  g.blocks.resize(s.n());
  for (int i = 0; i < s.n(); ++i) {
    g.blocks[i].reserve(s.n());
    for (int j = 0; j < s.n(); ++j) g.blocks[i].push_back(s.isometry(i).adjoint() * s.isometry(j));
  }
  return g;
}

Mat frame_operator(const SubspaceSequence& s) {
  Mat acc = Mat::zeros(s.field(), s.d(), s.d());
  for (int j = 0; j < s.n(); ++j) acc = acc + s.projection(j);
  return acc;
}

FrameCertificate certify(const SubspaceSequence& s, const Tolerances& tol) {
  tol.validate();
  if (s.n() < 2) fail(Errc::InvalidInput, "certification needs n >= 2");
  FrameCertificate cert;
  cert.field = s.field();
  cert.d = s.d();
  cert.r = s.r();
  cert.n = s.n();
  cert.tol = tol;

  EiCheck chk = ei_check(s, tol);
  cert.is_ei = chk.alpha.has_value();
  cert.alpha = chk.alpha;
  cert.alpha_spread = chk.spread;
  cert.coherence = block_coherence(s);

  const double c = static_cast<double>(s.r()) * s.n() / s.d();
  Mat defect = frame_operator(s) - Mat::identity(s.field(), s.d()).scaled(c);
  cert.is_tight = defect.max_abs() <= tol.residual_abs;
  if (cert.is_tight) cert.tight_constant = c;

  const long long nr = static_cast<long long>(s.n()) * s.r();
  if (nr >= s.d() && s.n() >= 2)
    cert.welch = std::sqrt(static_cast<double>(nr - s.d()) /
                           (static_cast<double>(s.d()) * (s.n() - 1)));
  cert.spark = 1.0 / static_cast<double>(s.d() / s.r());
  cert.is_eitff = cert.is_ei && cert.is_tight && cert.welch.has_value() &&
                  std::abs(*cert.alpha - *cert.welch) <= tol.residual_abs;
  return cert;
}

SubspaceSequence naimark_complement(const SubspaceSequence& s, const Tolerances& tol) {
  FrameCertificate cert = certify(s, tol);
  if (!cert.is_tight) fail(Errc::NotTight, "Naimark complement needs a tight fusion frame");
  const long long rn = static_cast<long long>(s.r()) * s.n();
  if (rn == s.d()) fail(Errc::NoComplement, "d = rn leaves nothing to complement");

  const int D = static_cast<int>(rn - s.d());
  const double scale = static_cast<double>(rn) / D;
  Mat g = fusion_gram(s).as_matrix();
  Mat comp = (Mat::identity(s.field(), rn) - g.scaled(static_cast<double>(s.d()) / rn)).scaled(scale);

  // Factor comp = Psi* Psi with Psi of full row rank D.
  auto factor = [&](const auto& es) {
    const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
    const double lmax = ev(ev.size() - 1);
    int kept = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i)
      if (ev(i) > tol.rank_rel * lmax) ++kept;
    if (kept != D) fail(Errc::InternalInconsistency, "complement Gram has unexpected rank");
    using M = std::decay_t<decltype(es.eigenvectors())>;
    M rows(D, rn);
    int k = 0;
    for (Eigen::Index i = ev.size() - 1; i >= 0 && k < D; --i)
      rows.row(k++) = std::sqrt(ev(i)) * es.eigenvectors().col(i).adjoint();
    return Mat(std::move(rows));
  };
  Mat psi;
  if (comp.is_real()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(comp.real_mat());
    psi = factor(es);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(comp.complex_mat());
    psi = factor(es);
  }

  // Slice into blocks and right-normalize each to an isometry (polar factor).
  std::vector<Mat> isometries;
  isometries.reserve(s.n());
  for (int j = 0; j < s.n(); ++j) {
    Mat blockj = psi.block(0, static_cast<Eigen::Index>(j) * s.r(), D, s.r());
    Svd dec = svd(blockj);
    isometries.push_back(dec.u * dec.v.adjoint());
  }
  return SubspaceSequence(s.field(), D, s.r(), std::move(isometries), tol);
}

Mat realify(const Mat& m) {
  if (m.is_real()) fail(Errc::InvalidInput, "realification expects a complex matrix");
  const auto& x = m.complex_mat();
  Eigen::MatrixXd out(2 * x.rows(), 2 * x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const double a = x(i, j).real(), b = x(i, j).imag();
      out(2 * i, 2 * j) = a;
      out(2 * i, 2 * j + 1) = -b;
      out(2 * i + 1, 2 * j) = b;
      out(2 * i + 1, 2 * j + 1) = a;
    }
  return Mat(std::move(out));
}

SubspaceSequence hoggar_c_to_r(const SubspaceSequence& s) {
  if (s.field() != Field::Complex) fail(Errc::InvalidInput, "input is already real");
  std::vector<Mat> isometries;
  isometries.reserve(s.n());
  for (const auto& phi : s.isometries()) isometries.push_back(realify(phi));
  return SubspaceSequence(Field::Real, 2 * s.d(), 2 * s.r(), std::move(isometries));
}

SubspaceSequence direct_sum(const SubspaceSequence& a, const SubspaceSequence& b,
                            const Tolerances& tol) {
  if (a.field() != b.field()) fail(Errc::InvalidInput, "direct sum needs a common field");
  if (a.n() != b.n()) fail(Errc::InvalidInput, "direct sum needs matching counts");
  if (static_cast<long long>(a.d()) * b.r() != static_cast<long long>(b.d()) * a.r())
    fail(Errc::RatioMismatch, "d/r ratios differ");
  if (!certify(a, tol).is_eitff || !certify(b, tol).is_eitff)
    fail(Errc::NotEITFF, "both summands must certify as equi-isoclinic tight fusion frames");

  const Field f = a.field();
  std::vector<Mat> isometries;
  isometries.reserve(a.n());
  for (int j = 0; j < a.n(); ++j) {
    Mat top = hcat({a.isometry(j), Mat::zeros(f, a.d(), b.r())});
    Mat bottom = hcat({Mat::zeros(f, b.d(), a.r()), b.isometry(j)});
    isometries.push_back(vcat({top, bottom}));
  }
  return SubspaceSequence(f, a.d() + b.d(), a.r() + b.r(), std::move(isometries), tol);
}

SubspaceSequence trivial_eitff(Field f, int r, int n) {
  if (r < 1 || n < 1) fail(Errc::InvalidInput, "need r, n >= 1");
  std::vector<Mat> isometries(n, Mat::identity(f, r));
  return SubspaceSequence(f, r, r, std::move(isometries));
}

}  // namespace eipack
