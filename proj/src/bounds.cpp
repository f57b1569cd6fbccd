#include "eipack/bounds.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>


namespace eipack {

ParamTriple::ParamTriple(int d_, int r_, int n_) : d(d_), r(r_), n(n_) {
  if (d < 1 || r < 1 || n < 1) fail(Errc::InvalidInput, "parameters must be positive");
  if (r > d) fail(Errc::InvalidInput, "need r <= d");
}

double welch_bound(const ParamTriple& t) {
  if (t.n < 2) fail(Errc::InvalidInput, "the bound needs n >= 2");
  const long long nr = static_cast<long long>(t.n) * t.r;
  if (nr < t.d) fail(Errc::BoundVacuous, "nr < d makes the radicand negative");
  return std::sqrt(static_cast<double>(nr - t.d) / (static_cast<double>(t.d) * (t.n - 1)));
}

double spark_bound(int d, int r) {
  if (r < 1 || d < r) fail(Errc::InvalidInput, "need d >= r >= 1");
  return 1.0 / static_cast<double>(d / r);
}

int spark_floor_from_coherence(double mu) {
  if (!(mu > 0.0 && mu <= 1.0)) fail(Errc::InvalidInput, "coherence must lie in (0,1]");
  const double x = 1.0 / mu;
  const double nearest = std::round(x);
  // snap nearly-integer reciprocals so 1/(1/k) does not round up
  const double k = (std::abs(x - nearest) <= 1e-9 * std::max(1.0, x)) ? nearest : std::ceil(x);
  return static_cast<int>(k) + 1;
}

GershgorinCheck independence_by_gershgorin(const SubspaceSequence& s, int k,
                                           const std::vector<int>& subset,
                                           const Tolerances& tol) {
  if (static_cast<int>(subset.size()) != k) fail(Errc::InvalidInput, "subset size must equal k");
  if (k < 1 || k > s.n()) fail(Errc::InvalidInput, "k out of range");
  std::vector<int> seen;
  for (int idx : subset) {
    if (idx < 0 || idx >= s.n()) fail(Errc::InvalidInput, "subset index out of range");
    if (std::find(seen.begin(), seen.end(), idx) != seen.end())
      fail(Errc::InvalidInput, "subset indices must be distinct");
    seen.push_back(idx);
  }
  double mu = 1.0;
  if (s.n() >= 2) {
    mu = block_coherence(s);
    if (mu > 0.0 && k > std::min<double>(s.n(), std::ceil(1.0 / mu)))
      fail(Errc::InvalidInput, "k exceeds ceil(1/mu)");
  }

  GershgorinCheck out;
  out.bound = 1.0 - (k - 1) * mu;
  if (k == 1) {
    out.lambda_min = 1.0;
  } else {
    std::vector<Mat> rows;
    for (int i : subset) {
      std::vector<Mat> row;
      for (int j : subset) row.push_back(s.isometry(i).adjoint() * s.isometry(j));
      rows.push_back(hcat(row));
    }
    Mat g = vcat(rows);
    if (g.is_real()) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.real_mat());
      out.lambda_min = es.eigenvalues()(0);
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g.complex_mat());
      out.lambda_min = es.eigenvalues()(0);
    }
  }
  if (out.lambda_min < out.bound - 1e-9)
    fail(Errc::InternalInconsistency, "computed eigenvalue fell below the Gershgorin bound");
  out.independent = out.lambda_min > tol.residual_abs;
  return out;
}

const char* comparison_name(BoundComparison c) {
  switch (c) {
    case BoundComparison::SparkExceeds: return "SPARK_EXCEEDS";
    case BoundComparison::Equal: return "EQUAL";
    case BoundComparison::WelchExceeds: return "WELCH_EXCEEDS";
  }
  return "?";
}

const char* case_name(ExclusionCase c) {
  switch (c) {
    case ExclusionCase::I: return "I";
    case ExclusionCase::II: return "II";
    case ExclusionCase::III: return "III";
    case ExclusionCase::IV: return "IV";
    case ExclusionCase::V: return "V";
  }
  return "?";
}

BoundsReport classify_spark_vs_welch(const ParamTriple& t) {
  const long long d = t.d, r = t.r, n = t.n;
  if (!(d > r)) fail(Errc::OutOfScope, "need 1 < d/r");
  if (!(d < n * r)) fail(Errc::OutOfScope, "need d/r < n");

  BoundsReport rep(t);
  rep.f = static_cast<int>(d / r);
  rep.k = t.n - rep.f;
  rep.welch = welch_bound(t);
  rep.spark = spark_bound(t.d, t.r);

  // spark > welch  <=>  1/f^2 > (nr-d)/(d(n-1))  <=>  d(n-1) > f^2 (nr-d)
  const long long lhs = d * (n - 1);
  const long long rhs = static_cast<long long>(rep.f) * rep.f * (n * r - d);
  if (lhs > rhs)
    rep.comparison = BoundComparison::SparkExceeds;
  else if (lhs == rhs)
    rep.comparison = BoundComparison::Equal;
  else
    rep.comparison = BoundComparison::WelchExceeds;
  rep.eitff_excluded = rep.comparison == BoundComparison::SparkExceeds;

  if (rep.eitff_excluded) {
    if (rep.f == 1)
      rep.case_label = ExclusionCase::I;
    else if (rep.k == 1)
      rep.case_label = ExclusionCase::II;
    else if (rep.k == 2)
      rep.case_label = ExclusionCase::III;
    else if (rep.f == 2)
      rep.case_label = ExclusionCase::IV;
    else if (rep.f == 3 && rep.k == 3)
      rep.case_label = ExclusionCase::V;
    else
      fail(Errc::InternalInconsistency, "exceedance outside the five classified cases");
  }
  return rep;
}

std::vector<BoundsReport> nonexistence_table(int d_max) {
  if (d_max < 8) fail(Errc::InvalidInput, "need d_max >= 8");
  std::vector<BoundsReport> out;
  for (int d = 2; d <= d_max; ++d)
    for (int r = 1; 2 * r <= d; ++r) {
      const int f = d / r;
      for (int n = f + 1; n <= f + 6; ++n) {
        BoundsReport rep = classify_spark_vs_welch(ParamTriple(d, r, n));
        if (rep.case_label == ExclusionCase::IV || rep.case_label == ExclusionCase::V)
          out.push_back(rep);
      }
    }
  return out;
}

RhDecomposition rh_decompose(int r) {
  if (r < 1) fail(Errc::InvalidInput, "need r >= 1");
  int v = 0, odd = r;
  while (odd % 2 == 0) {
    odd /= 2;
    ++v;
  }
  return {(odd - 1) / 2, v / 4, v % 4};
}

int radon_hurwitz(int r, Field f) {
  const RhDecomposition dec = rh_decompose(r);
  if (f == Field::Real) return 8 * dec.b + (1 << dec.c);
  return 8 * dec.b + 2 * dec.c + 2;
}

CountingBounds counting_bounds(int d, int r, Field f) {
  if (r < 1 || d < r) fail(Errc::InvalidInput, "need d >= r >= 1");
  const long long hd = herm_dim(f, d), hr = herm_dim(f, r);
  return {hd, hd - hr + 1, hd - 3 * hr + 3};
}

int max_ei_count_2r(int r, Field f, std::optional<double> alpha) {
  if (r < 1) fail(Errc::InvalidInput, "need r >= 1");
  const int rho = radon_hurwitz(r, f);
  if (!alpha) return rho + 2;
  if (f == Field::Complex)
    fail(Errc::Unsupported, "the parameter-dependent count is stated over the reals");
  const double a = *alpha;
  if (!(a > 0.0 && a < 1.0)) fail(Errc::InvalidInput, "alpha must lie in (0,1)");

  // 2(a^2-1) < (2a^2-1) n together with n <= rho+1, or equality with n <= rho+2.
  const double num = 2.0 * (a * a - 1.0), den = 2.0 * a * a - 1.0;
  int best = 1;
  if (den >= 0.0) {
    // the strict inequality holds for every n >= 2
    best = std::max(best, rho + 1);
  } else {
    const double nstar = num / den;  // dividing by a negative flips the inequality
    const double nearest = std::round(nstar);
    const bool integral = std::abs(nstar - nearest) <= 1e-9 * std::max(1.0, std::abs(nstar));
    int strict_cap = integral ? static_cast<int>(nearest) - 1
                              : static_cast<int>(std::floor(nstar));
    strict_cap = std::min(strict_cap, rho + 1);
    if (strict_cap >= 2) best = std::max(best, strict_cap);
    if (integral) {
      const int ncand = static_cast<int>(nearest);
      if (ncand >= 2 && ncand <= rho + 2) best = std::max(best, ncand);
    }
  }
  return best;
}

namespace {

std::optional<double> welch_at_ratio(double x, int n) {
  if (n < 2 || x > static_cast<double>(n)) return std::nullopt;
  return std::sqrt((static_cast<double>(n) / x - 1.0) / (n - 1));
}

}  // namespace

std::vector<Figure1Row> figure1_data(int n_max, int grid) {
  if (n_max < 2) fail(Errc::InvalidInput, "need n_max >= 2");
  if (grid < 2) fail(Errc::InvalidInput, "need grid >= 2");

  struct Keyed {
    double x;
    int phase;  // 0 = left limit, 1 = grid/right, 2 = marker
    Figure1Row row;
  };
  std::vector<Keyed> keyed;

  auto make_row = [&](double x, double spark, const std::string& marker) {
    Figure1Row row;
    row.x = x;
    row.spark = spark;
    row.marker = marker;
    for (int n = 2; n <= n_max; ++n) row.welch.push_back(welch_at_ratio(x, n));
    return row;
  };

  for (int i = 0; i < grid; ++i) {
    const double x = 1.0 + 3.0 * i / (grid - 1);
    keyed.push_back({x, 1, make_row(x, 1.0 / std::floor(x), "")});
  }
  for (int b : {2, 3, 4}) {
    const double x = b;
    keyed.push_back({x, 0, make_row(x, 1.0 / (b - 1), "")});
    const bool on_grid =
        std::any_of(keyed.begin(), keyed.end(), [&](const Keyed& k) { return k.phase == 1 && k.x == x; });
    if (!on_grid) keyed.push_back({x, 1, make_row(x, 1.0 / b, "")});
  }

  struct Marker {
    int num, den;
    const char* label;
  };
  // Coincidence points: filled = known packings, open = unresolved,
  // x = excluded because d/r > n-2 with d/r not in {n, n-1}.
  const Marker markers[] = {
      {1, 1, "filled"},  {2, 1, "filled"},   {5, 2, "filled"}, {8, 3, "filled"},
      {14, 5, "filled"}, {3, 1, "filled"},   {32, 11, "open"}, {27, 7, "open"},
      {16, 7, "x"},      {45, 13, "x"},
  };
  for (const Marker& m : markers) {
    const double x = static_cast<double>(m.num) / m.den;
    keyed.push_back({x, 2, make_row(x, 1.0 / std::floor(x), m.label)});
  }

  std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.phase < b.phase;
  });
  std::vector<Figure1Row> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.row));
  return out;
}

const char* equal_point_status_name(EqualPointStatus s) {
  switch (s) {
    case EqualPointStatus::Exists: return "EXISTS";
    case EqualPointStatus::Open: return "OPEN";
    case EqualPointStatus::ExcludedTrivially: return "EXCLUDED_TRIVIALLY";
    case EqualPointStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

EqualPointStatus equal_point_status(const ParamTriple& t) {
  const long long d = t.d, r = t.r, n = t.n;
  // d/r > n-2 with d/r notin {n, n-1} excludes a tight packing outright.
  if (d > (n - 2) * r && d != n * r && d != (n - 1) * r)
    return EqualPointStatus::ExcludedTrivially;
  // complements of repeated-copy frames: d/r = n-1
  if (d == (n - 1) * r) return EqualPointStatus::Exists;
  // packings known at d/r = 5/2 (n=5), 8/3 (n=6), 14/5 (n=7)
  if (2 * d == 5 * r && n == 5) return EqualPointStatus::Exists;
  if (3 * d == 8 * r && n == 6) return EqualPointStatus::Exists;
  if (5 * d == 14 * r && n == 7) return EqualPointStatus::Exists;
  if (11 * d == 32 * r && n == 8) return EqualPointStatus::Open;
  if (7 * d == 27 * r && n == 6) return EqualPointStatus::Open;
  return EqualPointStatus::Unknown;
}

}  // namespace eipack
