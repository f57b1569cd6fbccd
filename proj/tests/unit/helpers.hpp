#pragma once

#include <random>
#include <vector>

#include "eipack/fusion.hpp"
#include "eipack/rho.hpp"

namespace eipack::testing {

inline std::mt19937_64 seeded(std::uint64_t seed) { return std::mt19937_64(seed); }

// Half-dimensional packing from the maximal real family of size r.
inline SubspaceSequence real_simplex_eitff(int r, int m) {
  return eitff_from_simplex(simplex_from_basis(build_rho_real(r), m));
}

// Half-dimensional packing from the maximal complex family, at the largest
// count the family supports.
inline SubspaceSequence complex_simplex_eitff(int r) {
  RhoSequence basis = build_rho_complex(r);
  return eitff_from_simplex(simplex_from_basis(basis, static_cast<int>(basis.mats.size()) + 1));
}

// The workhorse: four planes in R^4 at parameter 1/sqrt(3).
inline SubspaceSequence eitff_r424() { return real_simplex_eitff(2, 3); }

// Four lines in C^2 at parameter 1/sqrt(3).
inline SubspaceSequence eitff_c214() {
  return eitff_from_simplex(simplex_from_basis(build_rho_complex(1), 3));
}

// n pairwise-orthogonal coordinate subspaces of F^{rn}.
inline SubspaceSequence orthogonal_coordinate_subspaces(Field f, int r, int n) {
  std::vector<Mat> isometries;
  for (int j = 0; j < n; ++j) {
    Mat top = Mat::zeros(f, static_cast<Eigen::Index>(j) * r, r);
    Mat mid = Mat::identity(f, r);
    Mat bot = Mat::zeros(f, static_cast<Eigen::Index>(n - 1 - j) * r, r);
    isometries.push_back(vcat({top, mid, bot}));
  }
  return SubspaceSequence(f, r * n, r, std::move(isometries));
}

// Equivalent sequence: a common left unitary and fresh right unitaries.
inline SubspaceSequence rotate_sequence(const SubspaceSequence& s, std::uint64_t seed) {
  auto rng = seeded(seed);
  Mat u = random_unitary(s.field(), s.d(), rng);
  std::vector<Mat> isometries;
  for (int j = 0; j < s.n(); ++j) {
    Mat z = random_unitary(s.field(), s.r(), rng);
    isometries.push_back(u * s.isometry(j) * z);
  }
  return SubspaceSequence(s.field(), s.d(), s.r(), std::move(isometries));
}

// Same subspaces viewed inside F^{d+extra} by appending zero rows.
inline SubspaceSequence embed_zero_rows(const SubspaceSequence& s, int extra) {
  std::vector<Mat> isometries;
  for (int j = 0; j < s.n(); ++j)
    isometries.push_back(vcat({s.isometry(j), Mat::zeros(s.field(), extra, s.r())}));
  return SubspaceSequence(s.field(), s.d() + extra, s.r(), std::move(isometries));
}

// Independent uniformly-random subspaces via the QR of Gaussian matrices.
inline SubspaceSequence random_subspaces(Field f, int d, int r, int n, std::uint64_t seed) {
  auto rng = seeded(seed);
  std::vector<Mat> isometries;
  for (int j = 0; j < n; ++j) {
    Mat u = random_unitary(f, d, rng);
    isometries.push_back(u.block(0, 0, d, r));
  }
  return SubspaceSequence(f, d, r, std::move(isometries));
}

}  // namespace eipack::testing
