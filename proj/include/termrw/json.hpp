#pragma once

#include <json.hpp>

#include "termrw/analysis.hpp"
#include "termrw/problem.hpp"

namespace termrw {

using Json = nlohmann::json;

/// `{"var":"x"}` or `{"fun":"f","args":[...]}`.
Json as_json(const TrsTerm& t);
Json as_json(const Position& p);
/// Object keyed by variable.
Json as_json(const GeneralizedSubstitution<std::string, std::string>& s);
Json as_json(const TrsRule& r);
Json as_json(const Reduct<std::string, std::string>& r);
/// Terms are reported with canonical x1, x2, ... variable names.
Json as_json(const TrsCriticalPair& cp);
Json as_json(const RulesProperties& p);
Json as_json(const Problem& p);
Json as_json(const NormalizationResult<std::string, std::string>& r);
/// Carries `status`: YES, NO or MAYBE.
Json as_json(const TrsVerdict& v);

/// Inverse of as_json for terms. Throws nlohmann::json::exception on
/// malformed input.
TrsTerm term_from_json(const Json& j);

}  // namespace termrw
