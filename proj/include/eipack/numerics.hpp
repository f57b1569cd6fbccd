#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "eipack/error.hpp"

namespace eipack {

enum class Field { Real, Complex };

const char* field_name(Field f);  // "R" or "C"

struct Tolerances {
  double rank_rel = 1e-8;      // relative singular-value threshold
  double residual_abs = 1e-9;  // absolute residual threshold for verification predicates
  void validate() const;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t;
  return t;
}

// Dense matrix over R or C. The field is a runtime tag; real matrices never
// allocate imaginary storage, and mixed-field arithmetic is rejected.
class Mat {
 public:
  Mat() : data_(Eigen::MatrixXd()) {}
  explicit Mat(Eigen::MatrixXd m) : data_(std::move(m)) {}
  explicit Mat(Eigen::MatrixXcd m) : data_(std::move(m)) {}

  static Mat zeros(Field f, Eigen::Index rows, Eigen::Index cols);
  static Mat identity(Field f, Eigen::Index n);

  Field field() const { return is_real() ? Field::Real : Field::Complex; }
  bool is_real() const { return std::holds_alternative<Eigen::MatrixXd>(data_); }
  Eigen::Index rows() const;
  Eigen::Index cols() const;

  const Eigen::MatrixXd& real_mat() const;
  const Eigen::MatrixXcd& complex_mat() const;
  Eigen::MatrixXcd to_complex() const;

  std::complex<double> at(Eigen::Index i, Eigen::Index j) const;

  Mat adjoint() const;
  Mat block(Eigen::Index i0, Eigen::Index j0, Eigen::Index p, Eigen::Index q) const;
  Mat operator+(const Mat& rhs) const;
  Mat operator-(const Mat& rhs) const;
  Mat operator*(const Mat& rhs) const;
  Mat scaled(double s) const;

  std::complex<double> trace() const;
  double max_abs() const;
  double frobenius_norm() const;
  double op_norm() const;  // largest singular value
  bool all_finite() const;
  double hermitian_defect() const;  // ||M - M*||_max (square only)
  double isometry_defect() const;   // ||A*A - I||_max

 private:
  std::variant<Eigen::MatrixXd, Eigen::MatrixXcd> data_;
};

Mat hcat(const std::vector<Mat>& parts);
Mat vcat(const std::vector<Mat>& parts);
Mat kron(const Mat& a, const Mat& b);
Mat hermitian_part(const Mat& m);  // (M + M*)/2

// A = U diag(sigma) V*, sigma nonincreasing and nonnegative.
struct Svd {
  Mat u;
  Eigen::VectorXd sigma;
  Mat v;
};

Svd svd(const Mat& a);               // thin U/V
Eigen::VectorXd singular_values(const Mat& a);
int numerical_rank(const Mat& a, const Tolerances& tol = default_tolerances());

// Rank with the singular-value gap between the accepted and rejected groups.
// gap is +inf when one of the groups is empty.
struct RankCertificate {
  int rank = 0;
  double gap = 0.0;
};
RankCertificate certified_rank(const Mat& a, const Tolerances& tol = default_tolerances());

// Minimum accepted/rejected singular-value ratio for a dimension claim to be
// reported as certified.
inline constexpr double kDimGapMin = 1e4;

// Orthonormal basis of {x : Ax = 0}; A must be real.
std::vector<Eigen::VectorXd> null_space(const Mat& a, const Tolerances& tol = default_tolerances());

// Real-coordinate encoding of Hermitian matrices. Off-diagonal coordinate
// pairs carry a factor sqrt(2) so the encoding is an isometry for the
// Frobenius inner product.
int herm_dim(Field f, int d);

struct HermCoords {
  Field field = Field::Real;
  int d = 0;
  Eigen::VectorXd coords;
};

HermCoords herm_to_coords(const Mat& m, const Tolerances& tol = default_tolerances());
Mat coords_to_herm(const HermCoords& c);

// Unitary whose first r columns equal the given isometry.
Mat complete_to_unitary(const Mat& phi, const Tolerances& tol = default_tolerances());

// Deterministic, stdlib-independent sampling (Box-Muller over raw 53-bit
// uniforms) so seeded outputs are reproducible byte-for-byte.
double uniform01(std::mt19937_64& rng);
double gaussian(std::mt19937_64& rng);
Mat random_gaussian(Field f, Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);
Mat random_unitary(Field f, Eigen::Index n, std::mt19937_64& rng);

}  // namespace eipack
