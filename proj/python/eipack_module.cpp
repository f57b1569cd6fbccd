#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eipack/bounds.hpp"
#include "eipack/corner.hpp"
#include "eipack/fusion.hpp"
#include "eipack/io.hpp"
#include "eipack/rho.hpp"

namespace py = pybind11;
using namespace eipack;

namespace {

Field field_from(const std::string& s) {
  if (s == "R") return Field::Real;
  if (s == "C") return Field::Complex;
  fail(Errc::InvalidInput, "field must be \"R\" or \"C\"");
}

std::vector<std::vector<std::complex<double>>> mat_entries(const Mat& m) {
  std::vector<std::vector<std::complex<double>>> out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out[i].reserve(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i].push_back(m.at(i, j));
  }
  return out;
}

py::dict certificate_dict(const FrameCertificate& cert) {
  py::dict d;
  d["field"] = field_name(cert.field);
  d["d"] = cert.d;
  d["r"] = cert.r;
  d["n"] = cert.n;
  d["is_ei"] = cert.is_ei;
  d["alpha"] = cert.alpha ? py::object(py::float_(*cert.alpha)) : py::none();
  d["alpha_spread"] = cert.alpha_spread;
  d["is_tight"] = cert.is_tight;
  d["tight_constant"] =
      cert.tight_constant ? py::object(py::float_(*cert.tight_constant)) : py::none();
  d["is_eitff"] = cert.is_eitff;
  d["coherence"] = cert.coherence;
  d["welch"] = cert.welch ? py::object(py::float_(*cert.welch)) : py::none();
  d["spark_bound"] = cert.spark;
  return d;
}

py::dict prefix_dict(const PrefixDims& dims) {
  py::dict d;
  d["dims"] = dims.dims;
  d["gaps"] = dims.gaps;
  d["certified"] = dims.certified;
  d["warnings"] = dims.warnings;
  return d;
}

SubspaceSequence build_eitff_2r(int r, const std::string& field, std::uint64_t seed) {
  const Field f = field_from(field);
  RhoSequence basis = f == Field::Real ? build_rho_real(r) : build_rho_complex(r);
  const int m = static_cast<int>(basis.mats.size()) + 1;
  std::optional<Eigen::MatrixXd> rotation;
  if (seed != 0 && m >= 2) {
    std::mt19937_64 rng(seed);
    rotation = random_unitary(Field::Real, m - 1, rng).real_mat();
  }
  return eitff_from_simplex(simplex_from_basis(basis, m, rotation));
}

SubspaceSequence build_counterexample(int r, const std::string& field) {
  RhoCounterexample ce = counterexample_not_power_of_two(r, field_from(field));
  return eitff_from_simplex(
      simplex_from_basis(ce.seq, static_cast<int>(ce.seq.mats.size()) + 1));
}

}  // namespace

PYBIND11_MODULE(_eipack, m) {
  m.doc() = "equi-isoclinic subspace packings: bounds, constructions, certificates";

  py::register_exception<Error>(m, "EipackError", PyExc_ValueError);

  py::class_<SubspaceSequence>(m, "SubspaceSequence")
      .def_property_readonly("field", [](const SubspaceSequence& s) { return field_name(s.field()); })
      .def_property_readonly("d", &SubspaceSequence::d)
      .def_property_readonly("r", &SubspaceSequence::r)
      .def_property_readonly("n", &SubspaceSequence::n)
      .def("isometry",
           [](const SubspaceSequence& s, int j) { return mat_entries(s.isometry(j)); }, py::arg("j"))
      .def("to_json", [](const SubspaceSequence& s) { return sequence_to_json(s).dump(2); })
      .def_static("from_json", [](const std::string& text) {
        return sequence_from_json(Json::parse(text));
      })
      .def("__repr__", [](const SubspaceSequence& s) {
        return std::string("SubspaceSequence(") + field_name(s.field()) + ", d=" +
               std::to_string(s.d()) + ", r=" + std::to_string(s.r()) + ", n=" +
               std::to_string(s.n()) + ")";
      });

  // bounds
  m.def("welch_bound", [](int d, int r, int n) { return welch_bound(ParamTriple(d, r, n)); },
        py::arg("d"), py::arg("r"), py::arg("n"));
  m.def("spark_bound", &spark_bound, py::arg("d"), py::arg("r"));
  m.def("spark_floor_from_coherence", &spark_floor_from_coherence, py::arg("mu"));
  m.def("classify_spark_vs_welch",
        [](int d, int r, int n) {
          BoundsReport rep = classify_spark_vs_welch(ParamTriple(d, r, n));
          py::dict out;
          out["welch"] = rep.welch;
          out["spark"] = rep.spark;
          out["comparison"] = comparison_name(rep.comparison);
          out["case"] = rep.case_label ? py::object(py::str(case_name(*rep.case_label))) : py::none();
          out["eitff_excluded"] = rep.eitff_excluded;
          return out;
        },
        py::arg("d"), py::arg("r"), py::arg("n"));
  m.def("nonexistence_table",
        [](int d_max) {
          std::vector<std::tuple<int, int, int, std::string>> out;
          for (const BoundsReport& rep : nonexistence_table(d_max))
            out.emplace_back(rep.triple.d, rep.triple.r, rep.triple.n,
                             case_name(*rep.case_label));
          return out;
        },
        py::arg("d_max"));
  m.def("radon_hurwitz",
        [](int r, const std::string& field) { return radon_hurwitz(r, field_from(field)); },
        py::arg("r"), py::arg("field"));
  m.def("counting_bounds",
        [](int d, int r, const std::string& field) {
          CountingBounds cb = counting_bounds(d, r, field_from(field));
          return py::make_tuple(cb.gerzon, cb.lemmens_seidel, cb.k3);
        },
        py::arg("d"), py::arg("r"), py::arg("field"));
  m.def("max_ei_count_2r",
        [](int r, const std::string& field, std::optional<double> alpha) {
          return max_ei_count_2r(r, field_from(field), alpha);
        },
        py::arg("r"), py::arg("field"), py::arg("alpha") = py::none());
  m.def("eitff_2rplus1_exists", [](int r) -> py::object {
    auto w = eitff_2rplus1_exists(r);
    if (!w) return py::none();
    return py::make_tuple(w->r, w->n);
  }, py::arg("r"));

  // constructions
  m.def("trivial_eitff",
        [](const std::string& field, int r, int n) { return trivial_eitff(field_from(field), r, n); },
        py::arg("field"), py::arg("r"), py::arg("n"));
  m.def("construct_ei3",
        [](int d, int r, double alpha) { return construct_ei3(d, r, alpha); }, py::arg("d"),
        py::arg("r"), py::arg("alpha"));
  m.def("eitff_2r", &build_eitff_2r, py::arg("r"), py::arg("field"), py::arg("seed") = 0,
        "tight packing of 2+rho(r) half-dimensional subspaces");
  m.def("counterexample_eitff", &build_counterexample, py::arg("r"), py::arg("field"));
  m.def("naimark_complement",
        [](const SubspaceSequence& s) { return naimark_complement(s); }, py::arg("sequence"));
  m.def("hoggar_c_to_r", &hoggar_c_to_r, py::arg("sequence"));
  m.def("direct_sum",
        [](const SubspaceSequence& a, const SubspaceSequence& b) { return direct_sum(a, b); },
        py::arg("a"), py::arg("b"));

  // certification
  m.def("certify", [](const SubspaceSequence& s) { return certificate_dict(certify(s)); },
        py::arg("sequence"));
  m.def("block_coherence", &block_coherence, py::arg("sequence"));
  m.def("is_equi_isoclinic",
        [](const SubspaceSequence& s) -> py::object {
          auto alpha = is_equi_isoclinic(s);
          if (!alpha) return py::none();
          return py::float_(*alpha);
        },
        py::arg("sequence"));
  m.def("principal_angles",
        [](const SubspaceSequence& s, int i, int j) {
          return principal_angles(s.isometry(i), s.isometry(j)).angles;
        },
        py::arg("sequence"), py::arg("i"), py::arg("j"));

  // corner spaces (0-based index sets)
  m.def("corner_dims",
        [](const SubspaceSequence& s, int max_j) {
          return prefix_dict(dims_K_prefix(s, default_tolerances(), /*strict=*/false, max_j));
        },
        py::arg("sequence"), py::arg("max_j") = 0);
  m.def("corner_dim",
        [](const SubspaceSequence& s, const std::vector<int>& J) {
          CornerBasis basis = corner_space(s, J);
          py::dict out;
          out["J"] = basis.J;
          out["dim"] = basis.dim;
          out["gap"] = basis.gap;
          out["certified"] = basis.certified;
          return out;
        },
        py::arg("sequence"), py::arg("J"));
  m.def("dim_L", [](const SubspaceSequence& s, const std::vector<int>& J) { return dim_L(s, J); },
        py::arg("sequence"), py::arg("J"));
  m.def("certify_dim_Kn",
        [](const SubspaceSequence& s) {
          KnCertificate cert = certify_dim_Kn_eq_n(s);
          py::dict out;
          out["satisfied"] = cert.satisfied;
          out["dims"] = cert.dims;
          out["is_eitff"] = cert.is_eitff;
          out["n"] = cert.n;
          return out;
        },
        py::arg("sequence"));
  m.def("projection_gram",
        [](const SubspaceSequence& s) {
          ProjectionGram pg = projection_gram_check(s);
          std::vector<std::vector<double>> gram(pg.gram.rows());
          for (Eigen::Index i = 0; i < pg.gram.rows(); ++i)
            for (Eigen::Index j = 0; j < pg.gram.cols(); ++j) gram[i].push_back(pg.gram(i, j));
          return py::make_tuple(gram, pg.rank);
        },
        py::arg("sequence"));

  // files
  m.def("save_sequence", &save_sequence, py::arg("path"), py::arg("sequence"));
  m.def("load_sequence", [](const std::string& path) { return load_sequence(path); },
        py::arg("path"));
}
