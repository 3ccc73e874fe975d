#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace lagr {

using Json = nlohmann::ordered_json;

enum class CheckStatus { pass, fail, evidence };

std::string to_string(CheckStatus s);

// One verification step. Boolean facts are encoded as value 1/0 against
// expected 1 with tolerance 0, so every check carries a tolerance.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::fail;
  double value = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string comparison;  // "<", "==", "within"
  std::string note;

  // value < tolerance
  static Check below(std::string name, double value, double tolerance, std::string note = {});
  // |value - expected| <= tolerance
  static Check within(std::string name, double value, double expected, double tolerance,
                      std::string note = {});
  // exact integer equality
  static Check equals(std::string name, long long value, long long expected, std::string note = {});
  static Check holds(std::string name, bool condition, std::string note = {});

  // Reclassifies a passing check as evidence; a failing one stays failed.
  Check& as_evidence();

  Json to_json() const;
};

struct Report {
  std::string command;
  Json parameters = Json::object();
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  Json data = Json::object();
  std::vector<Report> sections;

  void add(Check c) { checks.push_back(std::move(c)); }
  bool ok() const;
  int failures() const;

  // elapsed_ms is omitted unless requested, keeping reports reproducible.
  Json to_json(bool include_timing = false) const;
  std::string summary() const;
};

}  // namespace lagr
