#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eipack/subspaces.hpp"

namespace eipack {

struct ParamTriple {
  int d, r, n;
  ParamTriple(int d_, int r_, int n_);
};

// sqrt((n/(d/r) - 1)/(n - 1)); the vacuous case nr < d is an error.
double welch_bound(const ParamTriple& t);

// 1/floor(d/r); valid whenever d >= r.
double spark_bound(int d, int r);

// Smallest guaranteed spark of a linearly dependent sequence with the given
// block coherence: ceil(1/mu) + 1.
int spark_floor_from_coherence(double mu);

struct GershgorinCheck {
  bool independent = false;
  double bound = 0.0;       // 1 - (k-1) mu
  double lambda_min = 0.0;  // computed smallest Gram eigenvalue
};

GershgorinCheck independence_by_gershgorin(const SubspaceSequence& s, int k,
                                           const std::vector<int>& subset,
                                           const Tolerances& tol = default_tolerances());

enum class BoundComparison { SparkExceeds, Equal, WelchExceeds };
enum class ExclusionCase { I = 1, II, III, IV, V };

const char* comparison_name(BoundComparison c);
const char* case_name(ExclusionCase c);

struct BoundsReport {
  explicit BoundsReport(const ParamTriple& t) : triple(t) {}
  ParamTriple triple;
  double welch = 0.0;
  double spark = 0.0;
  BoundComparison comparison = BoundComparison::Equal;
  std::optional<ExclusionCase> case_label;
  bool eitff_excluded = false;
  int f = 0;  // floor(d/r)
  int k = 0;  // n - f
};

// Exact integer comparison of the two bounds for 1 < d/r < n, with the
// five-way case classification when the spark bound wins.
BoundsReport classify_spark_vs_welch(const ParamTriple& t);

// All triples with d <= d_max whose classification is case IV or V
// (the novel exclusions), sorted by (d, r, n).
std::vector<BoundsReport> nonexistence_table(int d_max);

struct RhDecomposition {
  int a, b, c;  // r = (2a+1) * 2^(4b+c), 0 <= c <= 3
};
RhDecomposition rh_decompose(int r);
int radon_hurwitz(int r, Field f);

struct CountingBounds {
  long long gerzon;
  long long lemmens_seidel;
  long long k3;
};
CountingBounds counting_bounds(int d, int r, Field f);

// Largest count of pairwise equi-isoclinic r-dimensional subspaces of F^{2r};
// with the optional parameter (real field only), the largest count admitting
// that parameter.
int max_ei_count_2r(int r, Field f, std::optional<double> alpha = std::nullopt);

struct Figure1Row {
  double x = 0.0;      // d/r sample
  double spark = 0.0;  // 1/floor(x)
  std::vector<std::optional<double>> welch;  // n = 2..n_max; absent where undefined
  std::string marker;  // "", "filled", "open", or "x"
};

// Bound curves over d/r in [1,4] plus the marked coincidence points; the
// breakpoints x in {2,3,4} appear twice to render the step function.
std::vector<Figure1Row> figure1_data(int n_max, int grid);

// Existence annotation for parameter points where the two bounds agree.
enum class EqualPointStatus { Exists, Open, ExcludedTrivially, Unknown };
const char* equal_point_status_name(EqualPointStatus s);
EqualPointStatus equal_point_status(const ParamTriple& t);

}  // namespace eipack
