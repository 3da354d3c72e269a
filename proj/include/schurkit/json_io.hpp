#pragma once

#include <string>

#include "json.hpp"
#include "schurkit/symfunc.hpp"

namespace schurkit {

/// {"basis":"s","terms":[{"partition":[2,1],"coeff":"1"},...]} with exact
/// rational coefficients as strings; a weight cap appears as "cap".
nlohmann::json to_json(const SymFunc& f);

/// {"arity":2,"bases":["s","s"],"terms":[{"slots":[[1],[1]],"coeff":"1"}]}
nlohmann::json to_json(const TensorExp& t);

SymFunc symfunc_from_json(const nlohmann::json& j);

}  // namespace schurkit
