#pragma once

#include <optional>
#include <vector>

#include "eipack/numerics.hpp"

namespace eipack {

// n isometries F^{d x r}, each representing an r-dimensional subspace of F^d.
class SubspaceSequence {
 public:
  SubspaceSequence(Field field, int d, int r, std::vector<Mat> isometries,
                   const Tolerances& tol = default_tolerances());

  Field field() const { return field_; }
  int d() const { return d_; }
  int r() const { return r_; }
  int n() const { return static_cast<int>(isometries_.size()); }
  const Mat& isometry(int j) const { return isometries_.at(j); }
  const std::vector<Mat>& isometries() const { return isometries_; }

  Mat projection(int j) const;  // Phi_j Phi_j*
  Mat synthesis() const;        // d x rn horizontal concatenation

 private:
  Field field_;
  int d_;
  int r_;
  std::vector<Mat> isometries_;
};

// Nondecreasing angles in [0, pi/2], one per subspace dimension.
struct PrincipalAngles {
  std::vector<double> angles;
};

PrincipalAngles principal_angles(const Mat& phi, const Mat& psi);

double block_coherence(const SubspaceSequence& s);

// Pairwise singular-value analysis behind the equi-isoclinism predicate.
// alpha is present when every cross product Phi_i* Phi_j is (a common)
// alpha times a unitary within tolerance; spread is the worst deviation seen.
struct EiCheck {
  std::optional<double> alpha;
  double spread = 0.0;
};

EiCheck ei_check(const SubspaceSequence& s, const Tolerances& tol = default_tolerances());
std::optional<double> is_equi_isoclinic(const SubspaceSequence& s,
                                        const Tolerances& tol = default_tolerances());

// Canonical form with Phi_1 = [I;0;0], Phi_2 = [aI;bI;0] and, for j >= 3,
// Phi_j = [aI; X_j; Y_j]. When alpha != 0 the unitaries U_j = aI + (b/a)X_j
// are exposed as well.
struct NormalizedEI {
  SubspaceSequence base;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<Mat> x;  // r x r middle blocks, j >= 3
  std::vector<Mat> y;  // (d-2r) x r bottom blocks, j >= 3
  std::vector<Mat> u;  // empty when alpha == 0
};

NormalizedEI normalize_ei(const SubspaceSequence& s, double alpha,
                          const Tolerances& tol = default_tolerances());

// Three equi-isoclinic subspaces of C^d with parameter alpha, for
// 2r < d < 3r and 1/2 <= alpha < 1.
SubspaceSequence construct_ei3(int d, int r, double alpha,
                               const Tolerances& tol = default_tolerances());

int common_span_dim(const SubspaceSequence& s, const Tolerances& tol = default_tolerances());

struct OddAmbientWitness {
  int r;
  int n;
};

// Parameters (r, n) of the unique equi-isoclinic tight fusion frame of
// r-dimensional subspaces in R^{2r+1} with even r, when one exists.
std::optional<OddAmbientWitness> eitff_2rplus1_exists(int r);

}  // namespace eipack
