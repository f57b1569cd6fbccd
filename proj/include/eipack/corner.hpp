#pragma once

#include <string>
#include <vector>

#include "eipack/subspaces.hpp"

namespace eipack {

// Orthonormal real basis of the space of Hermitian d x d matrices M with
// Phi_i* M Phi_i proportional to the identity for every i in J, together
// with the certified dimension.
struct CornerBasis {
  std::vector<int> J;  // 0-based indices into the sequence
  int dim = 0;
  std::vector<HermCoords> basis;
  Field field = Field::Real;
  int d = 0;
  int r = 0;
  double gap = 0.0;      // singular-value gap at the claimed rank
  bool certified = false;  // gap >= kDimGapMin
};

// Real constraint matrix whose null space is the corner space: one block of
// herm_dim(r)-1 rows per index, acting on herm_dim(d) coordinates.
Eigen::MatrixXd corner_constraint_matrix(const SubspaceSequence& s, const std::vector<int>& J);

CornerBasis corner_space(const SubspaceSequence& s, const std::vector<int>& J,
                         const Tolerances& tol = default_tolerances());

struct PrefixDims {
  std::vector<int> dims;
  std::vector<double> gaps;
  bool certified = false;
  std::vector<std::string> warnings;
};

// (dim K_1, ..., dim K_n). With strict=true the count bound n <= dim K_j and
// the closed forms for the first three dims are enforced; otherwise
// violations are reported as warnings (ingested data may be noisy).
// max_j <= 0 computes the full prefix.
PrefixDims dims_K_prefix(const SubspaceSequence& s, const Tolerances& tol = default_tolerances(),
                         bool strict = true, int max_j = 0);

// dim of the subspace where all the compressions share one constant, computed
// directly and checked against dim K_J - |J| + 1.
int dim_L(const SubspaceSequence& s, const std::vector<int>& J,
          const Tolerances& tol = default_tolerances());

struct ProjectionGram {
  Eigen::MatrixXd gram;
  int rank = 0;
};

// Frobenius Gram of the projections; for a sequence with parameter a it must
// equal a^2 r J + (1-a^2) r I, with full rank unless a = 1.
ProjectionGram projection_gram_check(const SubspaceSequence& s,
                                     const Tolerances& tol = default_tolerances());

struct KnCertificate {
  bool satisfied = false;  // dim K_n == n with certified gaps
  std::vector<int> dims;
  std::vector<double> gaps;
  bool is_eitff = false;
  int n = 0;
};

KnCertificate certify_dim_Kn_eq_n(const SubspaceSequence& s,
                                  const Tolerances& tol = default_tolerances());

// Largest residual of any projection against the span of a corner basis.
double projection_span_residual(const CornerBasis& basis, const SubspaceSequence& s,
                                const Tolerances& tol = default_tolerances());

}  // namespace eipack
