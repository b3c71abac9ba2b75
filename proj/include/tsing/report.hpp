#pragma once
// Structured command reports with two renderings: human text and
// line-delimited JSON. Both carry the same record set; integers are
// serialized as decimal strings so unbounded values survive.

#include <iosfwd>

#include <json.hpp>

#include "tsing/exactmath.hpp"

namespace tsing {

struct Report {
  std::string command;
  std::string status = "info";  // "pass" | "fail" | "info"
  std::vector<nlohmann::json> records;
  nlohmann::json summary = nlohmann::json::object();

  void render_text(std::ostream& os) const;
  void render_json(std::ostream& os) const;  // one JSON object per line
};

inline constexpr const char* kReportSchema = "tsing-report/1";

}  // namespace tsing
