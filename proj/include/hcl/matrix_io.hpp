#pragma once

#include "hcl/linalg.hpp"

#include <json.hpp>

#include <string>

namespace hcl {

// Matrix file format: { "n": int, "re": n x n array, "im": n x n array }.
// Hermitian symmetrization is applied on load under the construction
// tolerance; malformed input raises std::invalid_argument.
nlohmann::json matrix_to_json(const HermitianMatrix& a);
HermitianMatrix matrix_from_json(const nlohmann::json& j);

HermitianMatrix load_matrix(const std::string& path);
void save_matrix(const HermitianMatrix& a, const std::string& path);

}  // namespace hcl
