#include "kht/model.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <utility>

#include "kht/errors.hpp"
#include "kht/eval.hpp"

namespace kht {

SpaceRef Model::find_space(const std::string& name) const {
  for (const auto& s : spaces)
    if (s->name() == name) return s;
  return nullptr;
}

const ContMap* Model::find_map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name == name) return &m.map;
  return nullptr;
}

const Predicate* Model::find_predicate(const std::string& name) const {
  for (const auto& p : predicates)
    if (p.name == name) return &p.pred;
  return nullptr;
}

namespace {

bool identifier_like(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return true;
}

const nlohmann::json& field(const nlohmann::json& obj, const char* key,
                            const std::string& what) {
  auto it = obj.find(key);
  if (it == obj.end())
    fail(Errc::schema, what + " is missing the required field '" + key + "'");
  return *it;
}

std::string string_field(const nlohmann::json& obj, const char* key, const std::string& what) {
  const auto& v = field(obj, key, what);
  if (!v.is_string())
    fail(Errc::schema, what + " field '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Model model_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) fail(Errc::schema, "model file must be a JSON object");
  Model model;
  std::set<std::string> names;

  if (doc.contains("spaces")) {
    if (!doc["spaces"].is_array()) fail(Errc::schema, "'spaces' must be an array");
    for (const auto& js : doc["spaces"]) {
      std::string name = string_field(js, "name", "space");
      if (!identifier_like(name))
        fail(Errc::schema, "space name '" + name + "' is not an identifier");
      if (!names.insert("s:" + name).second)
        fail(Errc::schema, "space '" + name + "' is declared twice");
      const auto& pts = field(js, "points", "space " + name);
      if (!pts.is_array()) fail(Errc::schema, "points of '" + name + "' must be an array");
      std::vector<std::string> labels;
      for (const auto& p : pts) {
        if (!p.is_string()) fail(Errc::schema, "points of '" + name + "' must be strings");
        labels.push_back(p.get<std::string>());
      }
      if (!js.contains("opens")) {
        model.spaces.push_back(discrete_space(name, std::move(labels)));
        continue;
      }
      const auto& opens = js["opens"];
      if (!opens.is_array()) fail(Errc::schema, "opens of '" + name + "' must be an array");
      std::vector<std::vector<int>> family;
      for (const auto& o : opens) {
        if (!o.is_array()) fail(Errc::schema, "each open of '" + name + "' must be an array");
        std::vector<int> subset;
        for (const auto& v : o) {
          if (!v.is_number_integer())
            fail(Errc::schema, "opens of '" + name + "' must contain point indices");
          subset.push_back(v.get<int>());
        }
        family.push_back(std::move(subset));
      }
      try {
        model.spaces.push_back(mk_space(name, std::move(labels), family));
      } catch (const Error& e) {
        if (e.code() == Errc::duplicate_label || e.code() == Errc::not_a_topology)
          throw Error(Errc::validation, "space '" + name + "': " + e.what());
        throw;
      }
    }
  }

  if (doc.contains("maps")) {
    if (!doc["maps"].is_array()) fail(Errc::schema, "'maps' must be an array");
    for (const auto& jm : doc["maps"]) {
      std::string name = string_field(jm, "name", "map");
      if (!identifier_like(name))
        fail(Errc::schema, "map name '" + name + "' is not an identifier");
      if (!names.insert("m:" + name).second)
        fail(Errc::schema, "map '" + name + "' is declared twice");
      std::string dom_name = string_field(jm, "dom", "map " + name);
      std::string cod_name = string_field(jm, "cod", "map " + name);
      SpaceRef dom = model.find_space(dom_name);
      if (!dom) fail(Errc::schema, "map '" + name + "' references undeclared space '" +
                                       dom_name + "'");
      SpaceRef cod = model.find_space(cod_name);
      if (!cod) fail(Errc::schema, "map '" + name + "' references undeclared space '" +
                                       cod_name + "'");
      const auto& jt = field(jm, "table", "map " + name);
      if (!jt.is_object())
        fail(Errc::schema, "table of map '" + name + "' must map labels to labels");
      std::vector<int> table(dom->size(), -1);
      for (const auto& [from, to] : jt.items()) {
        auto from_idx = dom->index_of(from);
        if (!from_idx)
          fail(Errc::schema, "map '" + name + "': '" + from + "' is not a point of " + dom_name);
        if (!to.is_string())
          fail(Errc::schema, "map '" + name + "': table values must be labels");
        auto to_idx = cod->index_of(to.get<std::string>());
        if (!to_idx)
          fail(Errc::schema, "map '" + name + "': '" + to.get<std::string>() +
                                 "' is not a point of " + cod_name);
        table[*from_idx] = static_cast<int>(*to_idx);
      }
      for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i] < 0)
          fail(Errc::schema, "map '" + name + "': no value for point '" + dom->label(i) + "'");
      try {
        model.maps.push_back({name, ContMap{std::move(dom), std::move(cod), std::move(table)}});
      } catch (const Error& e) {
        throw Error(Errc::validation, "map '" + name + "': " + e.what());
      }
    }
  }

  if (doc.contains("predicates")) {
    if (!doc["predicates"].is_array()) fail(Errc::schema, "'predicates' must be an array");
    Interp interp(model);  // resolves space expressions against the declared spaces
    for (const auto& jp : doc["predicates"]) {
      std::string name = string_field(jp, "name", "predicate");
      if (!identifier_like(name))
        fail(Errc::schema, "predicate name '" + name + "' is not an identifier");
      if (!names.insert("p:" + name).second)
        fail(Errc::schema, "predicate '" + name + "' is declared twice");
      std::string space_text = string_field(jp, "space", "predicate " + name);
      SpaceRef space;
      try {
        space = interp.resolve_space(parse_space_expr(space_text));
      } catch (const Error& e) {
        fail(Errc::schema, "predicate '" + name + "': " + e.what());
      }
      const auto& je = field(jp, "extent", "predicate " + name);
      if (!je.is_array())
        fail(Errc::schema, "extent of predicate '" + name + "' must be an array");
      Bits extent(space->size());
      for (const auto& v : je) {
        if (!v.is_number_integer() || v.get<int>() < 0 ||
            v.get<std::size_t>() >= space->size())
          fail(Errc::schema, "predicate '" + name + "': extent entry out of range");
        extent.set(v.get<std::size_t>());
      }
      try {
        model.predicates.push_back({name, Predicate{std::move(space), std::move(extent)}});
      } catch (const Error& e) {
        throw Error(Errc::validation, "predicate '" + name + "': " + e.what());
      }
    }
  }

  return model;
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io, "cannot open model file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::schema, "model file '" + path + "' is not valid JSON: " + e.what());
  }
  return model_from_json(doc);
}

nlohmann::json space_to_json(const FinSpace& x, const Limits& lim) {
  nlohmann::json j;
  j["name"] = x.name();
  j["points"] = x.labels();
  if (!x.is_discrete()) {
    nlohmann::json opens = nlohmann::json::array();
    for (const Bits& o : x.opens(lim.family_cap)) opens.push_back(indices_of(o));
    j["opens"] = std::move(opens);
  }
  return j;
}

nlohmann::json predicate_to_json(const Predicate& p) {
  nlohmann::json j;
  j["space"] = p.space()->name();
  j["extent"] = indices_of(p.extent());
  return j;
}

nlohmann::json power_point_to_json(std::size_t point, std::size_t infinity_index) {
  nlohmann::json j;
  if (point == infinity_index)
    j["infinity"] = true;
  else
    j["mask"] = point;
  return j;
}

}  // namespace kht
