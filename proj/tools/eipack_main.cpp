#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "eipack/bounds.hpp"
#include "eipack/corner.hpp"
#include "eipack/fusion.hpp"
#include "eipack/io.hpp"
#include "eipack/rho.hpp"

namespace {

using eipack::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

eipack::Field parse_field(const std::string& s) {
  if (s == "R") return eipack::Field::Real;
  if (s == "C") return eipack::Field::Complex;
  eipack::fail(eipack::Errc::InvalidInput, "--field must be R or C");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) eipack::fail(eipack::Errc::InvalidInput, "cannot open " + path + " for writing");
  out << text;
}

Json report_header(const std::string& operation, const eipack::Tolerances& tol) {
  Json j;
  j["schema_version"] = 1;
  j["operation"] = operation;
  j["tolerances"] = eipack::tolerances_to_json(tol);
  return j;
}

std::vector<int> parse_index_list(const std::string& text, int n) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) eipack::fail(eipack::Errc::InvalidInput, "empty index in --J");
    const int one_based = std::stoi(token);
    if (one_based < 1 || one_based > n)
      eipack::fail(eipack::Errc::InvalidInput, "--J index out of range");
    out.push_back(one_based - 1);
  }
  if (out.empty()) eipack::fail(eipack::Errc::InvalidInput, "--J must list at least one index");
  return out;
}

struct ConstructArgs {
  std::string kind;
  std::vector<std::string> inputs;
  int d = 0, r = 0, n = 0;
  double alpha = 0.0;
  std::string field = "R";
  std::string out_path;
  std::uint64_t seed = 0;
};

eipack::SubspaceSequence run_construction(const ConstructArgs& a, const eipack::Tolerances& tol,
                                          Json& params, Json& extras) {
  using namespace eipack;
  if (a.kind == "ei3") {
    params = Json{{"d", a.d}, {"r", a.r}, {"alpha", a.alpha}};
    return construct_ei3(a.d, a.r, a.alpha, tol);
  }
  if (a.kind == "trivial") {
    params = Json{{"field", a.field}, {"r", a.r}, {"n", a.n}};
    return trivial_eitff(parse_field(a.field), a.r, a.n);
  }
  if (a.kind == "eitff2r") {
    const Field f = parse_field(a.field);
    RhoSequence basis = f == Field::Real ? build_rho_real(a.r) : build_rho_complex(a.r);
    const int m = static_cast<int>(basis.mats.size()) + 1;
    params = Json{{"field", a.field}, {"r", a.r}, {"n", m + 1}};
    std::optional<Eigen::MatrixXd> rotation;
    if (a.seed != 0 && m >= 2) {
      std::mt19937_64 rng(a.seed);
      rotation = random_unitary(Field::Real, m - 1, rng).real_mat();
    }
    Simplex simplex = simplex_from_basis(basis, m, rotation);
    SubspaceSequence s = eitff_from_simplex(simplex, tol);
    extras["dim_K_n"] = dim_Kn_via_sform(basis, s, tol);
    return s;
  }
  if (a.kind == "counterexample") {
    const Field f = parse_field(a.field);
    RhoCounterexample ce = counterexample_not_power_of_two(a.r, f);
    const int m = static_cast<int>(ce.seq.mats.size()) + 1;
    params = Json{{"field", a.field}, {"r", a.r}, {"n", m + 1}};
    Simplex simplex = simplex_from_basis(ce.seq, m);
    SubspaceSequence s = eitff_from_simplex(simplex, tol);
    PrefixDims dims = dims_K_prefix(s, tol);
    extras["corner"] = prefix_dims_to_json(dims, s.n());
    extras["dim_K_n"] = dims.dims.back();
    return s;
  }
  if (a.kind == "hoggar") {
    if (a.inputs.size() != 1) fail(Errc::InvalidInput, "hoggar needs one input file");
    params = Json{{"input", a.inputs[0]}};
    return hoggar_c_to_r(load_sequence(a.inputs[0], tol));
  }
  if (a.kind == "naimark") {
    if (a.inputs.size() != 1) fail(Errc::InvalidInput, "naimark needs one input file");
    params = Json{{"input", a.inputs[0]}};
    return naimark_complement(load_sequence(a.inputs[0], tol), tol);
  }
  if (a.kind == "dsum") {
    if (a.inputs.size() != 2) fail(Errc::InvalidInput, "dsum needs two input files");
    params = Json{{"inputs", a.inputs}};
    return direct_sum(load_sequence(a.inputs[0], tol), load_sequence(a.inputs[1], tol), tol);
  }
  fail(Errc::InvalidInput, "unknown construction kind " + a.kind);
}

int cmd_bounds(int d, int r, int n, const eipack::Tolerances& tol) {
  using namespace eipack;
  ParamTriple t(d, r, n);  // throws InvalidInput for bad shapes
  Json j = report_header("bounds", tol);
  j["params"] = Json{{"d", d}, {"r", r}, {"n", n}};
  try {
    j["welch"] = welch_bound(t);
  } catch (const Error&) {
    j["welch"] = nullptr;
  }
  j["spark"] = spark_bound(d, r);
  try {
    BoundsReport rep = classify_spark_vs_welch(t);
    j["comparison"] = comparison_name(rep.comparison);
    j["case"] = rep.case_label ? Json(case_name(*rep.case_label)) : Json(nullptr);
    j["eitff_excluded"] = rep.eitff_excluded;
    if (rep.comparison == BoundComparison::Equal)
      j["equal_point_status"] = equal_point_status_name(equal_point_status(t));
  } catch (const Error& e) {
    if (e.code() != Errc::OutOfScope) throw;
    j["comparison"] = "OUT_OF_SCOPE";
    j["case"] = nullptr;
    j["eitff_excluded"] = false;
  }
  for (Field f : {Field::Real, Field::Complex}) {
    CountingBounds cb = counting_bounds(d, r, f);
    j["counting_bounds"][field_name(f)] =
        Json{{"gerzon", cb.gerzon}, {"lemmens_seidel", cb.lemmens_seidel}, {"k3", cb.k3}};
    j["radon_hurwitz"][field_name(f)] = radon_hurwitz(r, f);
  }
  emit(j);
  return kExitOk;
}

int cmd_verify(const std::string& path, int corner_max, const std::string& j_list, bool corner_only,
               const eipack::Tolerances& tol) {
  using namespace eipack;
  SubspaceSequence s = load_sequence(path, tol);
  Json report = report_header(corner_only ? "corner" : "verify", tol);
  report["params"] = Json{{"input", path}};
  std::vector<std::string> failures;
  std::vector<std::string> warnings;

  FrameCertificate cert = certify(s, tol);
  if (!corner_only) report["certificate"] = certificate_to_json(cert);
  if (!cert.is_ei) failures.push_back("NotEquiIsoclinic");

  if (cert.is_ei) {
    try {
      projection_gram_check(s, tol);
    } catch (const Error& e) {
      failures.push_back(e.what());
    }
  }

  const bool want_corner = corner_only || corner_max > 0 || !j_list.empty();
  if (want_corner && cert.is_ei && cert.alpha && *cert.alpha < 1.0 - tol.residual_abs) {
    if (!j_list.empty()) {
      CornerBasis basis = corner_space(s, parse_index_list(j_list, s.n()), tol);
      report["corner_J"] = corner_basis_to_json(basis);
      if (!basis.certified) failures.push_back("UncertainCornerDimension");
    }
    if (corner_max > 0 || j_list.empty()) {
      PrefixDims dims = dims_K_prefix(s, tol, /*strict=*/false, corner_max);
      report["corner"] = prefix_dims_to_json(dims, s.n());
      warnings.insert(warnings.end(), dims.warnings.begin(), dims.warnings.end());
      if (!dims.certified) failures.push_back("UncertainCornerDimension");
    }
  } else if (want_corner && cert.is_ei) {
    warnings.push_back("corner dimensions skipped: parameter is 1");
  }

  report["warnings"] = warnings;
  report["failures"] = failures;
  report["verified"] = failures.empty();
  emit(report);
  return failures.empty() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equi-isoclinic subspace packings: bounds, constructions, certificates"};
  app.require_subcommand(1);

  eipack::Tolerances tol;
  app.add_option("--tol-rank", tol.rank_rel, "relative singular-value threshold")
      ->capture_default_str();
  app.add_option("--tol-res", tol.residual_abs, "absolute residual threshold")
      ->capture_default_str();

  int d = 0, r = 0, n = 0;
  auto* bounds = app.add_subcommand("bounds", "bound comparison and counting bounds for (d,r,n)");
  bounds->add_option("--d", d)->required();
  bounds->add_option("--r", r)->required();
  bounds->add_option("--n", n)->required();

  int dmax = 0;
  bool with_naimark = false;
  std::string out_path;
  auto* table = app.add_subcommand("table", "CSV of parameters excluded by the case analysis");
  table->add_option("--dmax", dmax, "largest ambient dimension")->required();
  table->add_flag("--naimark", with_naimark, "append each entry's complement parameters");
  table->add_option("--out", out_path, "output file (default stdout)");

  ConstructArgs cargs;
  auto* construct = app.add_subcommand("construct", "build a packing and print its certificate");
  construct->add_option("kind", cargs.kind, "ei3|trivial|eitff2r|hoggar|naimark|dsum|counterexample")
      ->required();
  construct->add_option("inputs", cargs.inputs, "input sequence files (hoggar/naimark/dsum)");
  construct->add_option("--d", cargs.d);
  construct->add_option("--r", cargs.r);
  construct->add_option("--n", cargs.n);
  construct->add_option("--alpha", cargs.alpha);
  construct->add_option("--field", cargs.field, "R or C");
  construct->add_option("--out", cargs.out_path, "write the sequence file here");
  construct->add_option("--seed", cargs.seed, "orientation seed (0 = canonical)")
      ->envname("EIPACK_SEED");

  std::string verify_path, j_list;
  int corner_max = 0;
  auto* verify = app.add_subcommand("verify", "certify a sequence file");
  verify->add_option("file", verify_path)->required();
  verify->add_option("--corner-max", corner_max, "compute dim K_1..K_j");
  verify->add_option("--J", j_list, "comma-separated 1-based index set for dim K_J");

  std::string corner_path, corner_j;
  int corner_prefix_max = 0;
  auto* corner = app.add_subcommand("corner", "corner-space dimensions for a sequence file");
  corner->add_option("file", corner_path)->required();
  corner->add_option("--corner-max", corner_prefix_max, "compute dim K_1..K_j");
  corner->add_option("--J", corner_j, "comma-separated 1-based index set for dim K_J");

  int nmax = 8, grid = 400;
  std::string plot_out;
  auto* plotdata = app.add_subcommand("plotdata", "CSV of the bound curves and marked points");
  plotdata->add_option("--nmax", nmax, "largest count column")->capture_default_str();
  plotdata->add_option("--grid", grid, "sample count over [1,4]")->capture_default_str();
  plotdata->add_option("--out", plot_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    tol.validate();
    if (app.got_subcommand(bounds)) return cmd_bounds(d, r, n, tol);

    if (app.got_subcommand(table)) {
      write_text(out_path, eipack::table_to_csv(eipack::nonexistence_table(dmax), with_naimark));
      return kExitOk;
    }

    if (app.got_subcommand(plotdata)) {
      write_text(plot_out, eipack::figure1_to_csv(eipack::figure1_data(nmax, grid), nmax));
      return kExitOk;
    }

    if (app.got_subcommand(construct)) {
      Json params, extras;
      try {
        eipack::SubspaceSequence s = run_construction(cargs, tol, params, extras);
        Json report = report_header("construct." + cargs.kind, tol);
        report["params"] = params;
        report["seed"] = cargs.seed;
        report["certificate"] = eipack::certificate_to_json(eipack::certify(s, tol));
        for (auto& [key, value] : extras.items()) report[key] = value;
        if (!cargs.out_path.empty()) {
          eipack::save_sequence(cargs.out_path, s);
          report["output"] = cargs.out_path;
        }
        emit(report);
        return kExitOk;
      } catch (const eipack::Error& e) {
        if (e.code() == eipack::Errc::ParseError) throw;
        std::cerr << e.what() << "\n";
        return kExitVerificationFailed;
      }
    }

    if (app.got_subcommand(verify))
      return cmd_verify(verify_path, corner_max, j_list, /*corner_only=*/false, tol);
    if (app.got_subcommand(corner))
      return cmd_verify(corner_path, corner_prefix_max, corner_j, /*corner_only=*/true, tol);
  } catch (const eipack::Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case eipack::Errc::ParseError:
      case eipack::Errc::InvalidInput:
      case eipack::Errc::NotIsometry:
        return kExitInputError;
      default:
        return kExitVerificationFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}
