#pragma once

#include <optional>
#include <vector>

#include "eipack/subspaces.hpp"

namespace eipack {

// n x n array of r x r blocks Phi_i* Phi_j with identity diagonal blocks.
struct FusionGram {
  Field field;
  int r;
  int n;
  std::vector<std::vector<Mat>> blocks;
  Mat as_matrix() const;
};

FusionGram fusion_gram(const SubspaceSequence& s);
Mat frame_operator(const SubspaceSequence& s);  // sum of the projections

struct FrameCertificate {
  Field field;
  int d, r, n;
  bool is_ei = false;
  std::optional<double> alpha;
  double alpha_spread = 0.0;
  bool is_tight = false;
  std::optional<double> tight_constant;
  bool is_eitff = false;
  double coherence = 0.0;
  std::optional<double> welch;  // absent when the bound is vacuous (nr < d)
  double spark = 0.0;           // 1/floor(d/r)
  Tolerances tol;
};

FrameCertificate certify(const SubspaceSequence& s, const Tolerances& tol = default_tolerances());

// TFF with parameters (rn-d, r, n) whose fusion Gram is the scaled
// complementary projection of the input's.
SubspaceSequence naimark_complement(const SubspaceSequence& s,
                                    const Tolerances& tol = default_tolerances());

// Entrywise a+bi -> [[a,-b],[b,a]]; doubles every dimension, keeps the
// certificate (isoclinism parameter, tightness, d/r ratio).
Mat realify(const Mat& m);
SubspaceSequence hoggar_c_to_r(const SubspaceSequence& s);

SubspaceSequence direct_sum(const SubspaceSequence& a, const SubspaceSequence& b,
                            const Tolerances& tol = default_tolerances());

// n copies of F^r; the degenerate seed with parameter 1.
SubspaceSequence trivial_eitff(Field f, int r, int n);

}  // namespace eipack
