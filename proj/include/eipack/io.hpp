#pragma once

#include <json.hpp>
#include <string>

#include "eipack/bounds.hpp"
#include "eipack/corner.hpp"
#include "eipack/fusion.hpp"

namespace eipack {

using Json = nlohmann::ordered_json;

// Sequence file schema (version 1): field "R"/"C", shape, and the isometry
// entries; complex entries as [re, im] pairs, real entries as plain numbers.
Json sequence_to_json(const SubspaceSequence& s);
SubspaceSequence sequence_from_json(const Json& j, const Tolerances& tol = default_tolerances());
void save_sequence(const std::string& path, const SubspaceSequence& s);
SubspaceSequence load_sequence(const std::string& path, const Tolerances& tol = default_tolerances());

Json tolerances_to_json(const Tolerances& tol);
Json certificate_to_json(const FrameCertificate& cert);
Json bounds_report_to_json(const BoundsReport& rep);
Json prefix_dims_to_json(const PrefixDims& dims, int n);
Json corner_basis_to_json(const CornerBasis& basis);

// Locale-independent shortest round-trip formatting.
std::string format_double(double x);

std::string table_to_csv(const std::vector<BoundsReport>& rows, bool with_naimark);
std::string figure1_to_csv(const std::vector<Figure1Row>& rows, int n_max);

}  // namespace eipack
