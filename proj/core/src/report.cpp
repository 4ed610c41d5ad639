#include "kht/report.hpp"

#include <algorithm>

namespace kht {

void sort_results(std::vector<LawResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const LawResult& a, const LawResult& b) {
    if (a.law != b.law) return a.law < b.law;
    return a.detail < b.detail;
  });
}

bool all_pass(const std::vector<LawResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.pass; });
}

std::string render_text(const std::vector<LawResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.pass ? "PASS " : "FAIL ";
    out += r.law;
    if (!r.detail.empty()) {
      out += "  ";
      out += r.detail;
    }
    out += "\n";
  }
  return out;
}

nlohmann::json render_json(const std::vector<LawResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json entry;
    entry["law"] = r.law;
    entry["status"] = r.pass ? "pass" : "fail";
    entry["witness"] = r.witness;
    if (!r.detail.empty()) entry["detail"] = r.detail;
    arr.push_back(std::move(entry));
  }
  return arr;
}

}  // namespace kht
