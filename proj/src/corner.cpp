#include "eipack/corner.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "eipack/fusion.hpp"

namespace eipack {

namespace {

// herm_dim(r) x herm_dim(d) matrix of the real-linear map
// coords(M) -> coords(Phi_i* M Phi_i).
Eigen::MatrixXd compression_rep(const SubspaceSequence& s, int i) {
  const Field f = s.field();
  const int hd = herm_dim(f, s.d()), hr = herm_dim(f, s.r());
  const Mat& phi = s.isometry(i);
  Eigen::MatrixXd rep(hr, hd);
  for (int k = 0; k < hd; ++k) {
    HermCoords unit{f, s.d(), Eigen::VectorXd::Unit(hd, k)};
    Mat compressed = hermitian_part(phi.adjoint() * coords_to_herm(unit) * phi);
    rep.col(k) = herm_to_coords(compressed).coords;
  }
  return rep;
}

// Orthonormal rows spanning the traceless directions of herm coordinates.
Eigen::MatrixXd traceless_rows(Field f, int r) {
  const int hr = herm_dim(f, r);
  Eigen::VectorXd id_coords = herm_to_coords(Mat::identity(f, r)).coords / std::sqrt(double(r));
  Mat q = complete_to_unitary(Mat(Eigen::MatrixXd(id_coords)));
  return q.real_mat().rightCols(hr - 1).transpose();
}

std::vector<int> checked_index_set(const SubspaceSequence& s, const std::vector<int>& J) {
  if (J.empty()) fail(Errc::InvalidInput, "index set must be nonempty");
  std::set<int> seen;
  for (int i : J) {
    if (i < 0 || i >= s.n()) fail(Errc::InvalidInput, "index out of range");
    if (!seen.insert(i).second) fail(Errc::InvalidInput, "indices must be distinct");
  }
  return J;
}

Eigen::MatrixXd stack_blocks(const std::vector<Eigen::MatrixXd>& blocks, int cols) {
  Eigen::Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Eigen::MatrixXd out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

}  // namespace

Eigen::MatrixXd corner_constraint_matrix(const SubspaceSequence& s, const std::vector<int>& J) {
  checked_index_set(s, J);
  const Field f = s.field();
  const int hd = herm_dim(f, s.d()), hr = herm_dim(f, s.r());
  std::vector<Eigen::MatrixXd> blocks;
  if (hr > 1) {
    const Eigen::MatrixXd tl = traceless_rows(f, s.r());
    for (int i : J) blocks.push_back(tl * compression_rep(s, i));
  }
  return stack_blocks(blocks, hd);
}

CornerBasis corner_space(const SubspaceSequence& s, const std::vector<int>& J,
                         const Tolerances& tol) {
  tol.validate();
  CornerBasis out;
  out.J = checked_index_set(s, J);
  out.field = s.field();
  out.d = s.d();
  out.r = s.r();
  Mat constraints(corner_constraint_matrix(s, J));
  RankCertificate rc = certified_rank(constraints, tol);
  out.gap = rc.gap;
  out.certified = rc.gap >= kDimGapMin;
  for (auto& v : null_space(constraints, tol))
    out.basis.push_back(HermCoords{s.field(), s.d(), std::move(v)});
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

PrefixDims dims_K_prefix(const SubspaceSequence& s, const Tolerances& tol, bool strict,
                         int max_j) {
  tol.validate();
  EiCheck chk = ei_check(s, tol);
  if (!chk.alpha) fail(Errc::NotEquiIsoclinic, "sequence is not equi-isoclinic within tolerance");
  if (*chk.alpha >= 1.0 - tol.residual_abs)
    fail(Errc::AlphaOne, "the dimension bounds need parameter < 1");

  const Field f = s.field();
  const int hd = herm_dim(f, s.d()), hr = herm_dim(f, s.r());
  const int depth = (max_j <= 0 || max_j > s.n()) ? s.n() : max_j;
  PrefixDims out;
  out.certified = true;

  std::vector<Eigen::MatrixXd> blocks;
  const Eigen::MatrixXd tl = hr > 1 ? traceless_rows(f, s.r()) : Eigen::MatrixXd();
  auto note = [&](const std::string& msg) {
    if (strict) fail(Errc::InternalInconsistency, msg);
    out.warnings.push_back(msg);
  };

  for (int j = 0; j < depth; ++j) {
    if (hr > 1) blocks.push_back(tl * compression_rep(s, j));
    RankCertificate rc = certified_rank(Mat(stack_blocks(blocks, hd)), tol);
    const int dim = hd - rc.rank;
    out.dims.push_back(dim);
    out.gaps.push_back(rc.gap);
    if (rc.gap < kDimGapMin) out.certified = false;
    if (dim < s.n())
      note("dim K_" + std::to_string(j + 1) + " = " + std::to_string(dim) +
           " fell below the count " + std::to_string(s.n()));
    if (j > 0 && dim > out.dims[j - 1])
      note("dims are not nonincreasing at index " + std::to_string(j + 1));
    if (j < 3) {
      const int closed = hd - (j + 1) * hr + (j + 1);
      const bool applies = (j + 1 <= 2) || s.n() >= 3;
      if (applies && dim != closed)
        note("dim K_" + std::to_string(j + 1) + " = " + std::to_string(dim) +
             " differs from the closed form " + std::to_string(closed));
    }
  }
  return out;
}

int dim_L(const SubspaceSequence& s, const std::vector<int>& J, const Tolerances& tol) {
  CornerBasis kj = corner_space(s, J, tol);
  const int m = kj.dim;
  const int jsize = static_cast<int>(J.size());
  if (jsize == 1) return m;

  // inner products of the corner basis against the projections, in the
  // isometric coordinates
  Eigen::MatrixXd g(jsize, m);
  for (int a = 0; a < jsize; ++a) {
    Eigen::VectorXd p = herm_to_coords(s.projection(J[a]), tol).coords;
    for (int l = 0; l < m; ++l) g(a, l) = p.dot(kj.basis[l].coords);
  }
  // rows orthogonal to the all-ones direction
  Eigen::VectorXd ones = Eigen::VectorXd::Constant(jsize, 1.0 / std::sqrt(double(jsize)));
  Mat q = complete_to_unitary(Mat(Eigen::MatrixXd(ones)));
  Eigen::MatrixXd proj = q.real_mat().rightCols(jsize - 1).transpose() * g;

  RankCertificate rc = certified_rank(Mat(proj), tol);
  const int dim = m - rc.rank;
  if (dim != kj.dim - jsize + 1)
    fail(Errc::InternalInconsistency,
         "direct computation disagrees with dim K_J - |J| + 1: got " + std::to_string(dim));
  return dim;
}

ProjectionGram projection_gram_check(const SubspaceSequence& s, const Tolerances& tol) {
  tol.validate();
  EiCheck chk = ei_check(s, tol);
  if (!chk.alpha) fail(Errc::NotEquiIsoclinic, "sequence is not equi-isoclinic within tolerance");
  const double alpha = *chk.alpha;

  const int n = s.n();
  std::vector<Mat> projections;
  projections.reserve(n);
  for (int j = 0; j < n; ++j) projections.push_back(s.projection(j));

  ProjectionGram out;
  out.gram.resize(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.gram(i, j) = (projections[i].adjoint() * projections[j]).trace().real();

  const double offdiag = alpha * alpha * s.r();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double expect = i == j ? s.r() : offdiag;
      if (std::abs(out.gram(i, j) - expect) > 100.0 * tol.residual_abs)
        fail(Errc::InternalInconsistency, "projection Gram deviates from its closed form");
    }
  out.rank = numerical_rank(Mat(out.gram), tol);
  return out;
}

KnCertificate certify_dim_Kn_eq_n(const SubspaceSequence& s, const Tolerances& tol) {
  PrefixDims prefix = dims_K_prefix(s, tol);
  KnCertificate cert;
  cert.dims = prefix.dims;
  cert.gaps = prefix.gaps;
  cert.n = s.n();
  cert.satisfied = prefix.certified && prefix.dims.back() == s.n();
  cert.is_eitff = certify(s, tol).is_eitff;
  return cert;
}

double projection_span_residual(const CornerBasis& basis, const SubspaceSequence& s,
                                const Tolerances& tol) {
  const int hd = herm_dim(s.field(), s.d());
  Eigen::MatrixXd b(hd, basis.dim);
  for (int l = 0; l < basis.dim; ++l) b.col(l) = basis.basis[l].coords;
  double worst = 0.0;
  for (int j = 0; j < s.n(); ++j) {
    Eigen::VectorXd p = herm_to_coords(s.projection(j), tol).coords;
    Eigen::VectorXd res = p - b * (b.transpose() * p);
    worst = std::max(worst, res.norm());
  }
  return worst;
}

}  // namespace eipack
