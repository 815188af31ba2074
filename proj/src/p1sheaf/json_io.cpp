#include "vfc/p1sheaf/json_io.hpp"

#include "vfc/error.hpp"

namespace vfc {

json to_json(const FreeSum& s) { return json(s.twists); }

json to_json(const SheafMap& m) {
  json rows = json::array();
  for (int j = 0; j < m.target().rank(); ++j) {
    json row = json::array();
    for (int i = 0; i < m.source().rank(); ++i) row.push_back(to_json(m.entry(j, i)));
    rows.push_back(row);
  }
  return json{{"char", m.field().p()}, {"source", to_json(m.source())}, {"target", to_json(m.target())}, {"entries", rows}};
}

json to_json(const FreeComplex& cx) {
  json terms = json::array(), maps = json::array();
  for (const auto& t : cx.terms) terms.push_back(to_json(t));
  for (const auto& m : cx.maps) maps.push_back(to_json(m));
  return json{{"terms", terms}, {"maps", maps}, {"position", cx.position}};
}

json to_json(const SplittingType& t) { return json{{"degrees", t.degrees}, {"text", t.to_string()}}; }

json to_json(const CohomologyDims& c) { return json{{"h0", c.h0}, {"h1", c.h1}}; }

FreeSum free_sum_from_json(const json& j, const std::string& ptr) {
  if (!j.is_array()) schema_error(ptr, "expected an array of twists");
  FreeSum s;
  for (std::size_t i = 0; i < j.size(); ++i)
    s.twists.push_back(static_cast<int>(jsonio::integer(j[i], ptr + "/" + std::to_string(i))));
  return s;
}

SheafMap sheaf_map_from_json(const json& j, const std::string& ptr) {
  Field f = jsonio::field(jsonio::member(j, "char", ptr), ptr + "/char");
  FreeSum src = free_sum_from_json(jsonio::member(j, "source", ptr), ptr + "/source");
  FreeSum tgt = free_sum_from_json(jsonio::member(j, "target", ptr), ptr + "/target");
  const json& rows = jsonio::member(j, "entries", ptr);
  const std::string rp = ptr + "/entries";
  if (!rows.is_array() || static_cast<int>(rows.size()) != tgt.rank()) schema_error(rp, "expected one row per target summand");
  std::vector<std::vector<BinaryForm>> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string p = rp + "/" + std::to_string(r);
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != src.rank())
      schema_error(p, "expected one entry per source summand");
    std::vector<BinaryForm> row;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      BinaryForm b = binary_form_from_json(rows[r][c], p + "/" + std::to_string(c));
      if (b.field() != f) schema_error(p + "/" + std::to_string(c), "entry over a different field");
      row.push_back(std::move(b));
    }
    entries.push_back(std::move(row));
  }
  try {
    return SheafMap::make(f, src, tgt, std::move(entries));
  } catch (const Error& e) {
    schema_error(rp, e.what());
  }
}

FreeComplex complex_from_json(const json& j, const std::string& ptr) {
  const json& maps = jsonio::member(j, "maps", ptr);
  if (!maps.is_array() || maps.empty() || maps.size() > 2) schema_error(ptr + "/maps", "expected one or two maps");
  std::vector<SheafMap> ms;
  for (std::size_t i = 0; i < maps.size(); ++i) ms.push_back(sheaf_map_from_json(maps[i], ptr + "/maps/" + std::to_string(i)));
  try {
    return ms.size() == 1 ? FreeComplex::kernel_of(std::move(ms[0])) : FreeComplex::middle_of(std::move(ms[0]), std::move(ms[1]));
  } catch (const Error& e) {
    schema_error(ptr + "/maps", e.what());
  }
}

}  // namespace vfc
