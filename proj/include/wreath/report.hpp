#ifndef WREATH_REPORT_HPP_
#define WREATH_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace wreath {

using Json = nlohmann::ordered_json;

// Machine-readable verification outcome.  Timing is attached only on
// request so that default reports are byte-identical across runs.
struct Report {
  std::string claim;
  Json params = Json::object();
  std::string status = "pass";  // pass | fail | skipped
  Json dims = Json::object();
  std::optional<Json> witness;

  bool passed() const { return status != "fail"; }

  void fail_with(Json w) {
    status = "fail";
    witness = std::move(w);
  }

  Json to_json() const {
    Json j;
    j["claim"] = claim;
    j["params"] = params;
    j["status"] = status;
    j["dims"] = dims;
    if (witness) j["witness"] = *witness;
    return j;
  }
};

inline Json reports_to_json(const std::vector<Report>& reports) {
  Json arr = Json::array();
  int failures = 0;
  for (const Report& r : reports) {
    arr.push_back(r.to_json());
    if (!r.passed()) ++failures;
  }
  Json out;
  out["reports"] = arr;
  out["total"] = reports.size();
  out["failures"] = failures;
  return out;
}

}  // namespace wreath

#endif  // WREATH_REPORT_HPP_
