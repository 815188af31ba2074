#include "vfc/cigeom/json_io.hpp"

#include "vfc/error.hpp"

namespace vfc {

json to_json(const CIModel& x) {
  json F = json::array(), G = json::array();
  for (const auto& f : x.equations) F.push_back(to_json(f));
  for (const auto& g : x.boundaries) G.push_back(to_json(g));
  return json{{"char", x.field.p()}, {"n", x.n}, {"F", F}, {"G", G}};
}

json to_json(const ContactRecord& c) {
  if (c.in_boundary) return json{{"in_boundary", true}};
  json factors = json::array();
  for (const auto& [g, m] : c.factors) factors.push_back(json{{"factor", g.to_string()}, {"multiplicity", m}});
  return json{{"in_boundary", false}, {"factors", factors}, {"total", c.total}};
}

json to_json(const FreenessVerdict& v) {
  json contacts = json::array();
  for (const auto& c : v.contacts) contacts.push_back(to_json(c));
  json j{{"status", std::string(to_string(v.status))}};
  j["splitting"] = v.splitting ? to_json(*v.splitting) : json(nullptr);
  j["presentation"] = v.presentation.empty() ? json(nullptr) : json(v.presentation);
  j["contacts"] = contacts;
  j["a1_qualified"] = v.a1_qualified;
  j["checks"] = json{{"lies_on", v.checks.lies_on},
                     {"smooth", v.checks.smooth},
                     {"log_smooth", v.checks.log_smooth},
                     {"tame", v.checks.tame},
                     {"composite_zero", v.checks.composite_zero}};
  return j;
}

CIModel model_from_json(const json& j, const std::string& ptr) {
  Field f = jsonio::field(jsonio::member(j, "char", ptr), ptr + "/char");
  const std::int64_t n = jsonio::integer(jsonio::member(j, "n", ptr), ptr + "/n");
  auto forms = [&](const char* key) {
    std::vector<MultiForm> out;
    const std::string kp = ptr + "/" + key;
    const json& arr = j.contains(key) ? j.at(key) : json::array();
    if (!arr.is_array()) schema_error(kp, "expected an array of polynomials");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ip = kp + "/" + std::to_string(i);
      MultiForm m = multi_form_from_json(arr[i], ip);
      if (m.field() != f) schema_error(ip + "/char", "characteristic differs from the model's");
      if (m.n() != n) schema_error(ip + "/n", "polynomial lives in a different P^n");
      out.push_back(std::move(m));
    }
    return out;
  };
  auto F = forms("F");
  auto G = forms("G");
  try {
    return CIModel::make(f, static_cast<int>(n), std::move(F), std::move(G));
  } catch (const Error& e) {
    schema_error(ptr, e.what());
  }
}

}  // namespace vfc
