#pragma once

// JSON schemas of the exported objects. Matrices are row-major arrays of
// rows.

#include <nlohmann/json.hpp>

#include "qdef/algebra.hpp"
#include "qdef/coupling.hpp"
#include "qdef/reps.hpp"

namespace qdef {

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json vector_to_json(const Vector& v);
Matrix matrix_from_json(const nlohmann::json& j);

/// {"name", "kind", "q", "p"}. Throws InvalidArgument for user-supplied
/// algebras, whose closures cannot be serialized.
nlohmann::json algebra_to_json(const AlgebraSpec& spec);
/// Rebuilds a catalog algebra from its name and parameters.
AlgebraSpec algebra_from_json(const nlohmann::json& j);

/// {"algebra", "N", "delta", "q", "j0", "labels", "Jplus", "Jminus",
/// "casimir"}.
nlohmann::json unirrep_to_json(const Unirrep& rep);

/// {"N1", "N2", "colours": [zeta, eta, delta], "q",
///  "blocks": [{"N", "coeffs"}]}, coeffs rows indexed by n1*(N2+1)+n2.
nlohmann::json wigner_to_json(const WignerTable& table);

/// {"N1", "N2", "colours": [zeta, eta], "q", "R"}.
nlohmann::json rmatrix_to_json(const Unirrep& rep1, const Unirrep& rep2,
                               const Matrix& R);

} // namespace qdef
