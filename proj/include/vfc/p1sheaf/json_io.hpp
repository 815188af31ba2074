#pragma once

#include "vfc/algebra/json_io.hpp"
#include "vfc/p1sheaf/transform.hpp"

namespace vfc {

json to_json(const FreeSum& s);
json to_json(const SheafMap& m);
json to_json(const FreeComplex& cx);
json to_json(const SplittingType& t);
json to_json(const CohomologyDims& c);

FreeSum free_sum_from_json(const json& j, const std::string& ptr = "");
SheafMap sheaf_map_from_json(const json& j, const std::string& ptr = "");
FreeComplex complex_from_json(const json& j, const std::string& ptr = "");

}  // namespace vfc
