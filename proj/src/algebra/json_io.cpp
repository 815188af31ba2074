#include "vfc/algebra/json_io.hpp"

#include "vfc/error.hpp"

namespace vfc {

void schema_error(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::Schema, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

namespace jsonio {

const json& member(const json& obj, const std::string& key, const std::string& ptr) {
  if (!obj.is_object()) schema_error(ptr, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(ptr + "/" + key, "missing member");
  return *it;
}

std::int64_t integer(const json& v, const std::string& ptr) {
  if (!v.is_number_integer()) schema_error(ptr, "expected an integer");
  return v.get<std::int64_t>();
}

Field field(const json& v, const std::string& ptr) {
  std::int64_t p = integer(v, ptr);
  if (p < 0) schema_error(ptr, "characteristic must be non-negative");
  try {
    return Field::characteristic(static_cast<std::uint64_t>(p));
  } catch (const Error& e) {
    schema_error(ptr, e.what());
  }
}

Scalar scalar(const json& v, Field f, const std::string& ptr) {
  try {
    if (v.is_string()) return f.parse(v.get<std::string>());
    if (v.is_number_integer()) return f.from_int(v.get<std::int64_t>());
  } catch (const Error& e) {
    schema_error(ptr, e.what());
  }
  schema_error(ptr, "expected a coefficient as decimal text");
}

std::vector<Scalar> scalar_array(const json& v, Field f, const std::string& ptr) {
  if (!v.is_array()) schema_error(ptr, "expected an array of coefficients");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar(v[i], f, ptr + "/" + std::to_string(i)));
  return out;
}

}  // namespace jsonio

json to_json(const BinaryForm& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.to_string());
  return json{{"char", f.field().p()}, {"degree", f.degree()}, {"coeffs", coeffs}};
}

json to_json(const MultiForm& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(json::array({json(e), c.to_string()}));
  return json{{"char", f.field().p()}, {"n", f.n()}, {"degree", f.degree()}, {"terms", terms}};
}

json to_json(const RationalCurveMap& phi) {
  json comps = json::array();
  for (const auto& c : phi.components()) {
    json a = json::array();
    for (int i = 0; i <= phi.degree(); ++i) a.push_back(c.coeff(i).to_string());
    comps.push_back(a);
  }
  return json{{"char", phi.field().p()}, {"n", phi.n()}, {"degree", phi.degree()}, {"components", comps}};
}

json to_json(const Point& pt) { return json::array({pt.s().to_string(), pt.t().to_string()}); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

BinaryForm binary_form_from_json(const json& j, const std::string& ptr) {
  Field f = jsonio::field(jsonio::member(j, "char", ptr), ptr + "/char");
  std::int64_t d = jsonio::integer(jsonio::member(j, "degree", ptr), ptr + "/degree");
  auto coeffs = jsonio::scalar_array(jsonio::member(j, "coeffs", ptr), f, ptr + "/coeffs");
  if (d < -1) schema_error(ptr + "/degree", "degree must be >= -1");
  if (static_cast<std::int64_t>(coeffs.size()) != d + 1)
    schema_error(ptr + "/coeffs", "expected degree+1 coefficients");
  BinaryForm b = BinaryForm::from_coeffs(f, std::move(coeffs));
  if (d >= 0 && b.is_zero()) schema_error(ptr + "/coeffs", "the zero form is written with degree -1");
  return b;
}

MultiForm multi_form_from_json(const json& j, const std::string& ptr) {
  Field f = jsonio::field(jsonio::member(j, "char", ptr), ptr + "/char");
  std::int64_t n = jsonio::integer(jsonio::member(j, "n", ptr), ptr + "/n");
  std::int64_t d = jsonio::integer(jsonio::member(j, "degree", ptr), ptr + "/degree");
  if (n < 1) schema_error(ptr + "/n", "n must be >= 1");
  if (d < 0) schema_error(ptr + "/degree", "degree must be >= 0");
  const json& terms = jsonio::member(j, "terms", ptr);
  if (!terms.is_array()) schema_error(ptr + "/terms", "expected an array");
  std::map<Exponent, Scalar> map;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = ptr + "/terms/" + std::to_string(i);
    const json& t = terms[i];
    if (!t.is_array() || t.size() != 2) schema_error(tp, "expected [exponents, coefficient]");
    if (!t[0].is_array() || static_cast<std::int64_t>(t[0].size()) != n + 1)
      schema_error(tp + "/0", "expected n+1 exponents");
    Exponent e;
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < t[0].size(); ++k) {
      std::int64_t x = jsonio::integer(t[0][k], tp + "/0/" + std::to_string(k));
      if (x < 0) schema_error(tp + "/0/" + std::to_string(k), "negative exponent");
      e.push_back(static_cast<int>(x));
      sum += x;
    }
    if (sum != d) schema_error(tp + "/0", "exponents do not sum to the degree");
    Scalar c = jsonio::scalar(t[1], f, tp + "/1");
    auto [it, inserted] = map.emplace(e, c);
    if (!inserted) it->second += c;
  }
  return MultiForm::from_terms(f, static_cast<int>(n), static_cast<int>(d), map);
}

RationalCurveMap curve_from_json(const json& j, const std::string& ptr) {
  Field f = jsonio::field(jsonio::member(j, "char", ptr), ptr + "/char");
  std::int64_t n = jsonio::integer(jsonio::member(j, "n", ptr), ptr + "/n");
  std::int64_t d = jsonio::integer(jsonio::member(j, "degree", ptr), ptr + "/degree");
  const json& comps = jsonio::member(j, "components", ptr);
  if (!comps.is_array()) schema_error(ptr + "/components", "expected an array");
  if (static_cast<std::int64_t>(comps.size()) != n + 1) schema_error(ptr + "/components", "expected n+1 components");
  std::vector<BinaryForm> forms;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string cp = ptr + "/components/" + std::to_string(i);
    auto c = jsonio::scalar_array(comps[i], f, cp);
    if (static_cast<std::int64_t>(c.size()) != d + 1) schema_error(cp, "expected degree+1 coefficients");
    forms.push_back(BinaryForm::from_coeffs(f, std::move(c)));
  }
  try {
    return RationalCurveMap::make(f, static_cast<int>(n), std::move(forms));
  } catch (const Error& e) {
    schema_error(ptr + "/components", e.what());
  }
}

Point point_from_json(const json& j, Field f, const std::string& ptr) {
  if (!j.is_array() || j.size() != 2) schema_error(ptr, "expected [s, t]");
  try {
    return Point::make(jsonio::scalar(j[0], f, ptr + "/0"), jsonio::scalar(j[1], f, ptr + "/1"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Schema) throw;
    schema_error(ptr, e.what());
  }
}

Matrix matrix_from_json(const json& j, Field f, const std::string& ptr) {
  if (!j.is_array()) schema_error(ptr, "expected an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) rows.push_back(jsonio::scalar_array(j[r], f, ptr + "/" + std::to_string(r)));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) schema_error(ptr, "ragged matrix");
  return Matrix::from_rows(f, rows);
}

}  // namespace vfc
