#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace kht {

// Outcome of one law check. Violations carry the lexicographically least
// witness found; they are report content, not errors.
struct LawResult {
  std::string law;
  bool pass = true;
  std::string detail;              // witness description or check statistics
  nlohmann::json witness;          // null when the law passes

  static LawResult ok(std::string law, std::string detail = "") {
    return {std::move(law), true, std::move(detail), nullptr};
  }
  static LawResult violation(std::string law, std::string detail, nlohmann::json witness) {
    return {std::move(law), false, std::move(detail), std::move(witness)};
  }
};

// Deterministic report order: by law name, then witness text.
void sort_results(std::vector<LawResult>& results);

bool all_pass(const std::vector<LawResult>& results);

// One line per law: "PASS <law>  <detail>" / "FAIL <law>  <detail>".
std::string render_text(const std::vector<LawResult>& results);

// [{"law": ..., "status": "pass"|"fail", "witness": {...}}, ...]
nlohmann::json render_json(const std::vector<LawResult>& results);

}  // namespace kht
