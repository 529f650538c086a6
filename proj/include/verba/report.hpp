#ifndef VERBA_REPORT_HPP
#define VERBA_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "verba/perm.hpp"

namespace verba {

/// Outcome of one check. `p` is 0 when the check involves no prime. A failed
/// report always carries a witness that re-fails the defining condition.
struct CheckReport {
  std::string check;
  std::string group;
  std::optional<std::string> word;
  std::optional<int> k;
  std::uint64_t p = 0;
  bool holds = false;
  bool skipped = false;
  nlohmann::json witness;  // object, or null when there is nothing to show
  double ms = 0.0;
};

/// {"check","group","word","k","p","holds","skipped","witness","ms"};
/// word, k and witness are null when absent.
nlohmann::json report_to_json(const CheckReport& r);

/// Compact single-line JSON.
std::string report_line(const CheckReport& r);

/// Fixed-width human-readable row.
std::string report_pretty(const CheckReport& r);

}  // namespace verba

#endif
