#pragma once

// JSON interchange for algebras and posets.

#include <string>

#include <json.hpp>

#include "reslat/algebra.hpp"
#include "reslat/variety.hpp"

namespace reslat {

/// {"size", "one", "zero" (index or null), "join", "meet", "mult", "imp",
/// "labels": {"<index>": "<label>"}}.
nlohmann::json algebra_to_json(const FiniteAlgebra& alg);

/// Inverse of algebra_to_json. Throws JsonError on missing or mistyped
/// members and StructuralError on malformed tables.
FiniteAlgebra algebra_from_json(const nlohmann::json& j);

/// {"nodes": [{"name", "label", "generators", "si_count", "axioms"}],
///  "order": [[0|1,...]], "covers": [[lower, upper],...]}.
nlohmann::json poset_to_json(const VarietyPoset& p);

std::string dump(const nlohmann::json& j);

}  // namespace reslat
