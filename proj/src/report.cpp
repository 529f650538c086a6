#include "verba/report.hpp"

#include <iomanip>
#include <sstream>

namespace verba {

nlohmann::json report_to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["group"] = r.group;
  j["word"] = r.word ? nlohmann::json(*r.word) : nlohmann::json(nullptr);
  j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json(nullptr);
  j["p"] = r.p;
  j["holds"] = r.holds;
  j["skipped"] = r.skipped;
  j["witness"] = r.witness.is_null() ? nlohmann::json(nullptr) : r.witness;
  j["ms"] = r.ms;
  return j;
}

std::string report_line(const CheckReport& r) { return report_to_json(r).dump(); }

std::string report_pretty(const CheckReport& r) {
  std::ostringstream os;
  os << std::left << std::setw(22) << r.check << std::setw(14) << r.group;
  os << std::setw(10) << (r.word ? *r.word : "-");
  os << std::setw(4) << (r.k ? std::to_string(*r.k) : "-");
  os << std::setw(4) << (r.p ? std::to_string(r.p) : "-");
  const char* verdict = r.skipped ? "skip" : (r.holds ? "ok" : "FAIL");
  os << std::setw(6) << verdict;
  if (!r.witness.is_null()) os << ' ' << r.witness.dump();
  os << "  (" << std::fixed << std::setprecision(1) << r.ms << " ms)";
  return os.str();
}

}  // namespace verba
