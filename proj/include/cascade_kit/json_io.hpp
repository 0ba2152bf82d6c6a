#pragma once

#include <json.hpp>

#include "cascade_kit/cascade.hpp"
#include "cascade_kit/uea.hpp"

namespace ck {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "v1";

json to_json(const Root& r);
Root root_from_json(const json& j);

/// {"a":"p/q","b":"p/q"}
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

/// {"terms":[{"coeff":Scalar,"mono":[[Root,exp],...]}, ...], "text": "..."}
json to_json(const Combination& c);
SymPoly sympoly_from_json(const SystemPtr& sys, const json& j);

json to_json(const ThetaRoot& r);
json to_json(const Cascade& c, const OrderSpec& order);

/// Flat text rendering of a report: one "key: value" line per leaf.
std::string render_text(const json& j);

}  // namespace ck
