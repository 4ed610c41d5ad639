#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "kht/heyting.hpp"
#include "kht/map.hpp"

namespace kht {

// A batch of named spaces, maps and predicates loaded from a model file.
// Loading validates everything: labels, topologies, continuity (naming the
// open whose preimage fails), clopenness.
//
// Schema: {"spaces":[{"name","points",["opens"]}],
//          "maps":[{"name","dom","cod","table"}],
//          "predicates":[{"name","space","extent"}]}
// A space without "opens" is discrete. A map's table is an object keyed by
// domain point labels. A predicate's space may be a declared name or a
// space expression over declared names ("X*Y", "P(X)").
struct Model {
  struct NamedMap {
    std::string name;
    ContMap map;
  };
  struct NamedPredicate {
    std::string name;
    Predicate pred;
  };

  std::vector<SpaceRef> spaces;
  std::vector<NamedMap> maps;
  std::vector<NamedPredicate> predicates;

  SpaceRef find_space(const std::string& name) const;
  const ContMap* find_map(const std::string& name) const;
  const Predicate* find_predicate(const std::string& name) const;
};

Model load_model(const std::string& path);
Model model_from_json(const nlohmann::json& doc);

nlohmann::json space_to_json(const FinSpace& x, const Limits& lim = {});
nlohmann::json predicate_to_json(const Predicate& p);
// {"mask": m} for a non-∞ point of a power space, {"infinity": true} for ∞.
nlohmann::json power_point_to_json(std::size_t point, std::size_t infinity_index);

}  // namespace kht
