#pragma once

#include "json.hpp"

#include "qtmoments/ring.hpp"

namespace qtmoments {

inline constexpr const char* kSchemaTag = "qtmoments/1";

/// {"terms":[{"coeff":"<decimal>","exps":{"lambda":2,"t":1}}, ...]} in term order.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace qtmoments
