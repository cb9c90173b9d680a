#pragma once

#include <string>

#include <json.hpp>

#include "spinline/holonomy.hpp"
#include "spinline/invariant.hpp"

namespace spinline {

// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json poly_json(const Poly& p);  // coefficient strings, lowest degree first

Json subspace_json(const Subspace& s);

// {signature: [r, s], dim: N, generators: [matrix...]}; odd n also records
// the chosen branch of the paired construction.
Json rep_export_json(const CliffordRep& rep);

// Generator exchange format: {signature: [r, s], name, generators: [n x n
// g-skew matrices]}. Import validates skewness and rebuilds the bivectors.
Json algebra_json(const LieAlgebraRep& g);
LieAlgebraRep algebra_from_json(const Json& j);
LieAlgebraRep algebra_from_file(const std::string& path);

Vec spinor_from_json(const Json& j);
Vec spinor_from_file(const std::string& path, int expected_dim);

Json line_report_json(const LineReport& report);
std::string line_report_text(const LineReport& report);

}  // namespace spinline
