#include "eipack/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace eipack {

namespace {

double number_from(const Json& v, const char* what) {
  if (!v.is_number()) fail(Errc::ParseError, std::string("expected a number for ") + what);
  return v.get<double>();
}

}  // namespace

Json sequence_to_json(const SubspaceSequence& s) {
  Json j;
  j["schema_version"] = 1;
  j["field"] = field_name(s.field());
  j["d"] = s.d();
  j["r"] = s.r();
  j["n"] = s.n();
  Json isometries = Json::array();
  for (int k = 0; k < s.n(); ++k) {
    const Mat& phi = s.isometry(k);
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < phi.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index jcol = 0; jcol < phi.cols(); ++jcol) {
        if (s.field() == Field::Real) {
          row.push_back(phi.real_mat()(i, jcol));
        } else {
          const auto z = phi.complex_mat()(i, jcol);
          row.push_back(Json::array({z.real(), z.imag()}));
        }
      }
      rows.push_back(std::move(row));
    }
    isometries.push_back(std::move(rows));
  }
  j["isometries"] = std::move(isometries);
  return j;
}

SubspaceSequence sequence_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object()) fail(Errc::ParseError, "sequence file must be a JSON object");
  if (!j.contains("schema_version") || j["schema_version"] != 1)
    fail(Errc::ParseError, "unsupported schema_version");
  for (const char* key : {"field", "d", "r", "n", "isometries"})
    if (!j.contains(key)) fail(Errc::ParseError, std::string("missing key ") + key);

  const std::string fs = j["field"].get<std::string>();
  if (fs != "R" && fs != "C") fail(Errc::ParseError, "field must be \"R\" or \"C\"");
  const Field f = fs == "R" ? Field::Real : Field::Complex;
  const int d = j["d"].get<int>(), r = j["r"].get<int>(), n = j["n"].get<int>();
  if (d < 1 || r < 1 || n < 1) fail(Errc::ParseError, "d, r, n must be positive");
  const Json& iso = j["isometries"];
  if (!iso.is_array() || static_cast<int>(iso.size()) != n)
    fail(Errc::ParseError, "isometries must be an array of length n");

  std::vector<Mat> mats;
  mats.reserve(n);
  for (const Json& entry : iso) {
    if (!entry.is_array() || static_cast<int>(entry.size()) != d)
      fail(Errc::ParseError, "isometry must have d rows");
    Eigen::MatrixXd re(d, r);
    Eigen::MatrixXcd cx(d, r);
    for (int i = 0; i < d; ++i) {
      const Json& row = entry[i];
      if (!row.is_array() || static_cast<int>(row.size()) != r)
        fail(Errc::ParseError, "isometry row must have r entries");
      for (int k = 0; k < r; ++k) {
        const Json& cell = row[k];
        if (f == Field::Real) {
          re(i, k) = number_from(cell, "a real entry");
        } else {
          if (!cell.is_array() || cell.size() != 2)
            fail(Errc::ParseError, "complex entries must be [re, im] pairs");
          cx(i, k) = {number_from(cell[0], "a real part"), number_from(cell[1], "an imaginary part")};
        }
      }
    }
    if (f == Field::Real)
      mats.emplace_back(std::move(re));
    else
      mats.emplace_back(std::move(cx));
  }
  return SubspaceSequence(f, d, r, std::move(mats), tol);
}

void save_sequence(const std::string& path, const SubspaceSequence& s) {
  std::ofstream out(path);
  if (!out) fail(Errc::InvalidInput, "cannot open " + path + " for writing");
  out << sequence_to_json(s).dump(2) << "\n";
}

SubspaceSequence load_sequence(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
  return sequence_from_json(j, tol);
}

Json tolerances_to_json(const Tolerances& tol) {
  return Json{{"rank_rel", tol.rank_rel}, {"residual_abs", tol.residual_abs}};
}

namespace {

Json opt_to_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

Json certificate_to_json(const FrameCertificate& cert) {
  Json j;
  j["field"] = field_name(cert.field);
  j["d"] = cert.d;
  j["r"] = cert.r;
  j["n"] = cert.n;
  j["is_ei"] = cert.is_ei;
  j["alpha"] = opt_to_json(cert.alpha);
  j["alpha_spread"] = cert.alpha_spread;
  j["is_tight"] = cert.is_tight;
  j["tight_constant"] = opt_to_json(cert.tight_constant);
  j["is_eitff"] = cert.is_eitff;
  j["coherence"] = cert.coherence;
  j["welch"] = opt_to_json(cert.welch);
  j["spark_bound"] = cert.spark;
  j["tolerances"] = tolerances_to_json(cert.tol);
  return j;
}

Json bounds_report_to_json(const BoundsReport& rep) {
  Json j;
  j["d"] = rep.triple.d;
  j["r"] = rep.triple.r;
  j["n"] = rep.triple.n;
  j["welch"] = rep.welch;
  j["spark"] = rep.spark;
  j["comparison"] = comparison_name(rep.comparison);
  j["case"] = rep.case_label ? Json(case_name(*rep.case_label)) : Json(nullptr);
  j["eitff_excluded"] = rep.eitff_excluded;
  j["f"] = rep.f;
  j["k"] = rep.k;
  if (rep.comparison == BoundComparison::Equal)
    j["equal_point_status"] = equal_point_status_name(equal_point_status(rep.triple));
  return j;
}

Json prefix_dims_to_json(const PrefixDims& dims, int n) {
  Json j;
  j["dims"] = dims.dims;
  j["n"] = n;
  bool satisfied = dims.certified && dims.warnings.empty();
  j["satisfied"] = satisfied;
  Json gaps = Json::array();
  for (double g : dims.gaps) gaps.push_back(std::isfinite(g) ? Json(g) : Json(nullptr));
  j["gaps"] = std::move(gaps);
  if (!dims.warnings.empty()) j["warnings"] = dims.warnings;
  return j;
}

Json corner_basis_to_json(const CornerBasis& basis) {
  Json j;
  Json one_based = Json::array();
  for (int i : basis.J) one_based.push_back(i + 1);
  j["J"] = std::move(one_based);
  j["dim"] = basis.dim;
  j["gap"] = std::isfinite(basis.gap) ? Json(basis.gap) : Json(nullptr);
  j["certified"] = basis.certified;
  return j;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string table_to_csv(const std::vector<BoundsReport>& rows, bool with_naimark) {
  std::ostringstream out;
  out << "d,r,n,case\n";
  for (const auto& rep : rows) {
    const char* label = rep.case_label ? case_name(*rep.case_label) : "";
    out << rep.triple.d << ',' << rep.triple.r << ',' << rep.triple.n << ',' << label << '\n';
    if (with_naimark) {
      const long long comp = static_cast<long long>(rep.triple.r) * rep.triple.n - rep.triple.d;
      out << comp << ',' << rep.triple.r << ',' << rep.triple.n << ',' << label << '\n';
    }
  }
  return out.str();
}

std::string figure1_to_csv(const std::vector<Figure1Row>& rows, int n_max) {
  std::ostringstream out;
  out << "x,spark";
  for (int n = 2; n <= n_max; ++n) out << ",welch_" << n;
  out << ",marker\n";
  for (const auto& row : rows) {
    out << format_double(row.x) << ',' << format_double(row.spark);
    for (const auto& w : row.welch) out << ',' << (w ? format_double(*w) : "");
    out << ',' << row.marker << '\n';
  }
  return out.str();
}

}  // namespace eipack
