#pragma once

#include <optional>
#include <vector>

#include "eipack/subspaces.hpp"

namespace eipack {

// Unitaries C_1..C_m in F^{r x r} with C_i* C_j + C_j* C_i = 0 for i != j.
struct RhoSequence {
  Field field;
  int r;
  std::vector<Mat> mats;
};

// (1/r) Re tr(A B*)
double rho_inner(const Mat& a, const Mat& b);

// Maximal anticommuting family over C, built by the doubling recursion from
// the base pair (iI, I); the final element is the identity.
RhoSequence build_rho_complex(int r);

// Maximal real families for dyadic part 1, 2, 4, 8: identity, a rotation
// pair, quaternion left multiplications, octonion left multiplications,
// each tensored up to size r. Dyadic part 16 and above is unsupported.
RhoSequence build_rho_real(int r);

// m unitaries in the real span of a rho-orthonormal family with pairwise
// rho-inner product -1/(m-1).
struct Simplex {
  Field field;
  int r;
  int m;
  std::vector<Mat> mats;
};

// Regular-simplex coordinates over the first m-1 basis elements; an optional
// (m-1)x(m-1) real orthogonal map reorients the vertex coordinates inside the
// same span.
Simplex simplex_from_basis(const RhoSequence& basis, int m,
                           const std::optional<Eigen::MatrixXd>& rotation = std::nullopt);

// Phi_1 = [I;0], Phi_j = [aI; bB_j]: a tight equi-isoclinic packing of
// m+1 half-dimensional subspaces.
SubspaceSequence eitff_from_simplex(const Simplex& b, const Tolerances& tol = default_tolerances());

struct C0Space {
  std::vector<Mat> basis;
  int dim = 0;
};

// Real solution space of C0* C_j + C_j* C0 = 0 over all j.
C0Space c0_space(const std::vector<Mat>& mats, const Tolerances& tol = default_tolerances());

// n + dim of the c0 space of the basis elements spanning the simplex;
// cross-checked against the directly computed corner dimension.
int dim_Kn_via_sform(const RhoSequence& basis, const SubspaceSequence& s,
                     const Tolerances& tol = default_tolerances());

// For r = (2a+1) 2^k with a >= 1: the family D (x) A_j whose c0 space is
// nonzero, together with the explicit witness.
struct RhoCounterexample {
  RhoSequence seq;
  Mat c0;
};

RhoCounterexample counterexample_not_power_of_two(int r, Field f);

}  // namespace eipack
