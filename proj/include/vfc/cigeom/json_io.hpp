#pragma once

#include "vfc/cigeom/verdict.hpp"
#include "vfc/p1sheaf/json_io.hpp"

namespace vfc {

json to_json(const CIModel& x);
json to_json(const ContactRecord& c);
json to_json(const FreenessVerdict& v);

/// {"char", "n", "F": [...], "G": [...]}
CIModel model_from_json(const json& j, const std::string& ptr = "");

}  // namespace vfc
