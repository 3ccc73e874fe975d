#include "lagr/report.hpp"

#include <cmath>
#include <sstream>

namespace lagr {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::evidence: return "evidence";
  }
  return "fail";
}

Check Check::below(std::string name, double value, double tolerance, std::string note) {
  Check c{std::move(name), CheckStatus::fail, value, 0.0, tolerance, "<", std::move(note)};
  if (std::isfinite(value) && value < tolerance) c.status = CheckStatus::pass;
  return c;
}

Check Check::within(std::string name, double value, double expected, double tolerance, std::string note) {
  Check c{std::move(name), CheckStatus::fail, value, expected, tolerance, "within", std::move(note)};
  if (std::isfinite(value) && std::abs(value - expected) <= tolerance) c.status = CheckStatus::pass;
  return c;
}

Check Check::equals(std::string name, long long value, long long expected, std::string note) {
  Check c{std::move(name),         CheckStatus::fail, static_cast<double>(value),
          static_cast<double>(expected), 0.0,              "==",
          std::move(note)};
  if (value == expected) c.status = CheckStatus::pass;
  return c;
}

Check Check::holds(std::string name, bool condition, std::string note) {
  return equals(std::move(name), condition ? 1 : 0, 1, std::move(note));
}

Check& Check::as_evidence() {
  if (status == CheckStatus::pass) status = CheckStatus::evidence;
  return *this;
}

Json Check::to_json() const {
  Json j;
  j["name"] = name;
  j["status"] = lagr::to_string(status);
  j["value"] = value;
  if (comparison != "<") j["expected"] = expected;
  j["tolerance"] = tolerance;
  j["comparison"] = comparison;
  if (!note.empty()) j["note"] = note;
  return j;
}

bool Report::ok() const { return failures() == 0; }

int Report::failures() const {
  int n = 0;
  for (const auto& c : checks) n += c.status == CheckStatus::fail;
  for (const auto& s : sections) n += s.failures();
  return n;
}

Json Report::to_json(bool include_timing) const {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["parameters"] = parameters;
  j["seed"] = seed;
  j["status"] = ok() ? "pass" : "fail";
  if (include_timing) j["elapsed_ms"] = elapsed_ms;
  Json checks_json = Json::array();
  for (const auto& c : checks) checks_json.push_back(c.to_json());
  j["checks"] = std::move(checks_json);
  if (!data.empty()) j["data"] = data;
  if (!sections.empty()) {
    Json s = Json::array();
    for (const auto& r : sections) s.push_back(r.to_json(include_timing));
    j["sections"] = std::move(s);
  }
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  os << "== " << command;
  if (!parameters.empty()) os << ' ' << parameters.dump();
  os << '\n';
  for (const auto& c : checks) {
    os << "  [" << lagr::to_string(c.status) << "] " << c.name << ": " << c.value;
    if (c.comparison == "<") {
      os << " (< " << c.tolerance << ')';
    } else if (c.comparison == "==") {
      os << " (expected " << c.expected << ')';
    } else {
      os << " (expected " << c.expected << " +/- " << c.tolerance << ')';
    }
    if (!c.note.empty()) os << "  " << c.note;
    os << '\n';
  }
  for (const auto& s : sections) os << s.summary();
  return os.str();
}

}  // namespace lagr
