#include "tsing/report.hpp"

#include <ostream>

namespace tsing {

using nlohmann::json;

namespace {

std::string scalar_str(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

void Report::render_text(std::ostream& os) const {
  os << "# " << command << "\n";
  for (const json& rec : records) {
    bool first = true;
    for (auto it = rec.begin(); it != rec.end(); ++it) {
      if (!first) os << "  ";
      first = false;
      os << it.key() << "=" << scalar_str(it.value());
    }
    os << "\n";
  }
  os << "-- status: " << status;
  for (auto it = summary.begin(); it != summary.end(); ++it)
    os << "  " << it.key() << "=" << scalar_str(it.value());
  os << "\n";
}

void Report::render_json(std::ostream& os) const {
  json meta{{"schema", kReportSchema}, {"type", "meta"}, {"command", command}};
  os << meta.dump() << "\n";
  for (const json& rec : records) {
    json line = rec;
    line["type"] = "record";
    os << line.dump() << "\n";
  }
  json sum = summary;
  sum["type"] = "summary";
  sum["status"] = status;
  os << sum.dump() << "\n";
}

}  // namespace tsing
