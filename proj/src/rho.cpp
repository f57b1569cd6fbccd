#include "eipack/rho.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "eipack/corner.hpp"

namespace eipack {

namespace {

constexpr double kBuildTol = 1e-12;

void validate_rho(const RhoSequence& seq, double tol) {
  for (const auto& c : seq.mats) {
    if (c.rows() != seq.r || c.cols() != seq.r || c.field() != seq.field)
      fail(Errc::InvalidInput, "family entries must be square matrices over one field");
    if (c.isometry_defect() > tol)
      fail(Errc::InternalInconsistency, "family entry is not unitary");
  }
  const int m = static_cast<int>(seq.mats.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Mat anti = seq.mats[i].adjoint() * seq.mats[j] + seq.mats[j].adjoint() * seq.mats[i];
      if (anti.max_abs() > tol)
        fail(Errc::InternalInconsistency, "family entries do not anticommute");
    }
}

// Left multiplication matrices of a composition algebra given by a table of
// unit triples with e_a e_b = e_c cyclically.
struct UnitProduct {
  int sign;
  int index;
};

std::vector<Eigen::MatrixXd> left_mult_family(int dim, const std::vector<std::array<int, 3>>& triples) {
  std::vector<std::vector<UnitProduct>> mult(dim, std::vector<UnitProduct>(dim));
  for (int j = 0; j < dim; ++j) {
    mult[0][j] = {1, j};
    mult[j][0] = {1, j};
  }
  for (int i = 1; i < dim; ++i) mult[i][i] = {-1, 0};
  for (const auto& t : triples) {
    const int a = t[0], b = t[1], c = t[2];
    mult[a][b] = {1, c};
    mult[b][a] = {-1, c};
    mult[b][c] = {1, a};
    mult[c][b] = {-1, a};
    mult[c][a] = {1, b};
    mult[a][c] = {-1, b};
  }
  std::vector<Eigen::MatrixXd> out;
  for (int i = 1; i < dim; ++i) {
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) l(mult[i][j].index, j) = mult[i][j].sign;
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace

double rho_inner(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    fail(Errc::InvalidInput, "rho inner product needs square matrices of equal size");
  if (a.field() != b.field()) fail(Errc::InvalidInput, "mixed-field inner product");
  return (a * b.adjoint()).trace().real() / static_cast<double>(a.rows());
}

RhoSequence build_rho_complex(int r) {
  if (r < 1) fail(Errc::InvalidInput, "need r >= 1");
  int odd = r, k = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++k;
  }

  using C = std::complex<double>;
  std::vector<Eigen::MatrixXcd> mats;
  mats.push_back(Eigen::MatrixXcd::Identity(odd, odd) * C(0, 1));
  mats.push_back(Eigen::MatrixXcd::Identity(odd, odd));

  for (int step = 0; step < k; ++step) {
    const Eigen::Index s = mats.front().rows();
    std::vector<Eigen::MatrixXcd> next;
    for (const auto& c : mats) {
      Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2 * s, 2 * s);
      d.topRightCorner(s, s) = -c.adjoint();
      d.bottomLeftCorner(s, s) = c;
      next.push_back(std::move(d));
    }
    Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(2 * s, 2 * s);
    diag.topLeftCorner(s, s) = Eigen::MatrixXcd::Identity(s, s) * C(0, 1);
    diag.bottomRightCorner(s, s) = Eigen::MatrixXcd::Identity(s, s) * C(0, -1);
    next.push_back(std::move(diag));
    next.push_back(Eigen::MatrixXcd::Identity(2 * s, 2 * s));
    mats = std::move(next);
  }

  RhoSequence seq{Field::Complex, r, {}};
  for (auto& m : mats) seq.mats.emplace_back(std::move(m));
  validate_rho(seq, kBuildTol);
  return seq;
}

RhoSequence build_rho_real(int r) {
  if (r < 1) fail(Errc::InvalidInput, "need r >= 1");
  int odd = r, k = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++k;
  }
  if (k > 3) fail(Errc::UnsupportedDyadicPart, "real families need dyadic part at most 8");

  std::vector<Eigen::MatrixXd> small;
  if (k == 0) {
    small = {Eigen::MatrixXd::Identity(1, 1)};
  } else if (k == 1) {
    Eigen::MatrixXd j(2, 2);
    j << 0, -1, 1, 0;
    small = {j, Eigen::MatrixXd::Identity(2, 2)};
  } else if (k == 2) {
    small = left_mult_family(4, {{1, 2, 3}});
    small.push_back(Eigen::MatrixXd::Identity(4, 4));
  } else {
    small = left_mult_family(
        8, {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}});
    small.push_back(Eigen::MatrixXd::Identity(8, 8));
  }

  RhoSequence seq{Field::Real, r, {}};
  const Mat pad = Mat::identity(Field::Real, odd);
  for (const auto& a : small) seq.mats.push_back(kron(Mat(a), pad));
  validate_rho(seq, kBuildTol);
  return seq;
}

Simplex simplex_from_basis(const RhoSequence& basis, int m,
                           const std::optional<Eigen::MatrixXd>& rotation) {
  if (m < 2) fail(Errc::InvalidInput, "a simplex needs m >= 2");
  if (m - 1 > static_cast<int>(basis.mats.size()))
    fail(Errc::BasisTooShort, "need at least m-1 basis elements");

  // unit vectors in R^{m-1} with pairwise inner product -1/(m-1)
  Eigen::VectorXd ones = Eigen::VectorXd::Constant(m, 1.0 / std::sqrt(double(m)));
  Eigen::MatrixXd q = complete_to_unitary(Mat(Eigen::MatrixXd(ones))).real_mat().rightCols(m - 1);
  Eigen::MatrixXd vertices(m, m - 1);
  const double scale = 1.0 / std::sqrt(1.0 - 1.0 / m);
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd u = -Eigen::VectorXd::Constant(m, 1.0 / m);
    u(i) += 1.0;
    vertices.row(i) = scale * (q.transpose() * u).transpose();
  }
  if (rotation) {
    if (rotation->rows() != m - 1 || rotation->cols() != m - 1)
      fail(Errc::InvalidInput, "rotation must act on the vertex coordinates");
    if (Mat(*rotation).isometry_defect() > 1e-9)
      fail(Errc::InvalidInput, "rotation must be orthogonal");
    vertices = vertices * rotation->transpose();
  }

  Simplex out{basis.field, basis.r, m, {}};
  for (int i = 0; i < m; ++i) {
    Mat b = Mat::zeros(basis.field, basis.r, basis.r);
    for (int l = 0; l < m - 1; ++l) b = b + basis.mats[l].scaled(vertices(i, l));
    out.mats.push_back(std::move(b));
  }
  for (int i = 0; i < m; ++i) {
    if (out.mats[i].isometry_defect() > 1e-9)
      fail(Errc::InternalInconsistency, "simplex element is not unitary");
    for (int j = i + 1; j < m; ++j)
      if (std::abs(rho_inner(out.mats[i], out.mats[j]) + 1.0 / (m - 1)) > 1e-9)
        fail(Errc::InternalInconsistency, "simplex inner products are off");
  }
  return out;
}

SubspaceSequence eitff_from_simplex(const Simplex& b, const Tolerances& tol) {
  const int n = b.m + 1, r = b.r;
  const double alpha = std::sqrt((n - 2.0) / (2.0 * n - 2.0));
  const double beta = std::sqrt(1.0 - alpha * alpha);
  const Mat id = Mat::identity(b.field, r);
  std::vector<Mat> isometries;
  isometries.reserve(n);
  isometries.push_back(vcat({id, Mat::zeros(b.field, r, r)}));
  for (int j = 0; j < b.m; ++j)
    isometries.push_back(vcat({id.scaled(alpha), b.mats[j].scaled(beta)}));
  return SubspaceSequence(b.field, 2 * r, r, std::move(isometries), tol);
}

C0Space c0_space(const std::vector<Mat>& mats, const Tolerances& tol) {
  if (mats.empty()) fail(Errc::InvalidInput, "need at least one matrix");
  const Field f = mats.front().field();
  const int r = static_cast<int>(mats.front().rows());
  for (const auto& m : mats)
    if (m.field() != f || m.rows() != r || m.cols() != r)
      fail(Errc::InvalidInput, "matrices must be square over one field and size");

  const int vars = f == Field::Real ? r * r : 2 * r * r;
  const int hr = herm_dim(f, r);
  const int mcount = static_cast<int>(mats.size());

  auto basis_matrix = [&](int v) {
    if (f == Field::Real) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(r, r);
      e(v / r, v % r) = 1.0;
      return Mat(std::move(e));
    }
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(r, r);
    const int entry = v / 2;
    e(entry / r, entry % r) = (v % 2 == 0) ? std::complex<double>(1, 0) : std::complex<double>(0, 1);
    return Mat(std::move(e));
  };

  Eigen::MatrixXd constraints(mcount * hr, vars);
  for (int v = 0; v < vars; ++v) {
    Mat e = basis_matrix(v);
    for (int j = 0; j < mcount; ++j) {
      Mat h = e.adjoint() * mats[j] + mats[j].adjoint() * e;
      constraints.block(j * hr, v, hr, 1) = herm_to_coords(hermitian_part(h)).coords;
    }
  }

  C0Space out;
  for (const auto& vec : null_space(Mat(constraints), tol)) {
    Mat acc = Mat::zeros(f, r, r);
    for (int v = 0; v < vars; ++v)
      if (vec(v) != 0.0) acc = acc + basis_matrix(v).scaled(vec(v));
    out.basis.push_back(std::move(acc));
  }
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

int dim_Kn_via_sform(const RhoSequence& basis, const SubspaceSequence& s, const Tolerances& tol) {
  const int m = s.n() - 1;
  if (m - 1 > static_cast<int>(basis.mats.size()))
    fail(Errc::InvalidInput, "basis is shorter than the simplex span");
  std::vector<Mat> span(basis.mats.begin(), basis.mats.begin() + (m - 1));
  const int predicted = s.n() + c0_space(span, tol).dim;

  std::vector<int> all(s.n());
  for (int j = 0; j < s.n(); ++j) all[j] = j;
  const int direct = corner_space(s, all, tol).dim;
  if (direct != predicted)
    fail(Errc::InternalInconsistency,
         "corner dimension " + std::to_string(direct) + " disagrees with " +
             std::to_string(predicted));
  return predicted;
}

RhoCounterexample counterexample_not_power_of_two(int r, Field f) {
  if (r < 1) fail(Errc::InvalidInput, "need r >= 1");
  int odd = r, k = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++k;
  }
  if (odd == 1) fail(Errc::NotApplicable, "r is a power of 2");
  if (f == Field::Real && k > 3)
    fail(Errc::UnsupportedDyadicPart, "real families need dyadic part at most 8");

  const int s = 1 << k;
  RhoSequence base = f == Field::Real ? build_rho_real(s) : build_rho_complex(s);
  const int rho = static_cast<int>(base.mats.size());

  Eigen::MatrixXd dblock = -Eigen::MatrixXd::Identity(odd, odd);
  dblock(0, 0) = 1.0;
  Mat d = f == Field::Real ? Mat(dblock) : Mat(Eigen::MatrixXcd(dblock.cast<std::complex<double>>()));

  RhoSequence seq{f, r, {}};
  for (int j = 0; j < rho - 1; ++j) seq.mats.push_back(kron(d, base.mats[j]));
  seq.mats.push_back(Mat::identity(f, r));
  validate_rho(seq, kBuildTol);

  Eigen::MatrixXd c0r = Eigen::MatrixXd::Zero(r, r);
  c0r.block(0, s, s, s) = Eigen::MatrixXd::Identity(s, s);
  c0r.block(s, 0, s, s) = -Eigen::MatrixXd::Identity(s, s);
  Mat c0 = f == Field::Real ? Mat(c0r) : Mat(Eigen::MatrixXcd(c0r.cast<std::complex<double>>()));

  for (const auto& c : seq.mats) {
    Mat anti = c0.adjoint() * c + c.adjoint() * c0;
    if (anti.max_abs() > kBuildTol)
      fail(Errc::InternalInconsistency, "witness fails to anticommute with the family");
  }
  return {std::move(seq), std::move(c0)};
}

}  // namespace eipack
