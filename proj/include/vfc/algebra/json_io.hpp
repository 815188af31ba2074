#pragma once

#include <string>

#include <json.hpp>

#include "vfc/algebra/binary_form.hpp"
#include "vfc/algebra/curve_map.hpp"
#include "vfc/algebra/matrix.hpp"
#include "vfc/algebra/multi_form.hpp"

namespace vfc {

using json = nlohmann::ordered_json;

/// Throws ErrorCode::Schema with the JSON pointer of the offending value.
[[noreturn]] void schema_error(const std::string& pointer, const std::string& what);

namespace jsonio {

const json& member(const json& obj, const std::string& key, const std::string& ptr);
std::int64_t integer(const json& v, const std::string& ptr);
Field field(const json& v, const std::string& ptr);
Scalar scalar(const json& v, Field f, const std::string& ptr);
std::vector<Scalar> scalar_array(const json& v, Field f, const std::string& ptr);

}  // namespace jsonio

json to_json(const BinaryForm& f);
json to_json(const MultiForm& f);
json to_json(const RationalCurveMap& phi);
json to_json(const Point& pt);
json to_json(const Matrix& m);

/// When `expected` is given the embedded "char" must agree with it.
BinaryForm binary_form_from_json(const json& j, const std::string& ptr = "");
MultiForm multi_form_from_json(const json& j, const std::string& ptr = "");
RationalCurveMap curve_from_json(const json& j, const std::string& ptr = "");
Point point_from_json(const json& j, Field f, const std::string& ptr = "");
Matrix matrix_from_json(const json& j, Field f, const std::string& ptr = "");

}  // namespace vfc
