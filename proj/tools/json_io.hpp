#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hyperweight/bounds.hpp"
#include "hyperweight/codes.hpp"
#include "hyperweight/poly.hpp"
#include "hyperweight/verify.hpp"
#include "hyperweight/weights.hpp"

namespace hyperweight::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json polynomial_to_json(const Polynomial& f);
/// Coefficients are canonical reps in [0, q); negative integers -c are read
/// as the additive inverse of rep c.
Polynomial polynomial_from_json(const Json& j, const FieldPtr& field);
std::vector<Polynomial> polynomials_from_json(const Json& j, const FieldPtr& field);

Json field_json(const Field& field);
Json code_json(const LinearCode& code, bool include_generator);
Json formula_json(const FormulaResult& f);
Json zero_bound_json(const ZeroBound& b);
Json suite_json(const SuiteReport& report, const VerifyOptions& options);

/// Human-readable rendering of any document produced above.
std::string render_table(const Json& doc);
/// CSV rendering: the "checks" array if present, else one flattened row.
std::string render_csv(const Json& doc);

}  // namespace hyperweight::cli
