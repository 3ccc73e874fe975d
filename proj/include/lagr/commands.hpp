#pragma once

// Verification suites behind the `lagr` command-line tool. Each returns a
// Report; the process exit code is 0 iff the report has no failed check.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "lagr/report.hpp"

namespace lagr {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandOptions {
  std::optional<int> n;
  int starts = 20;
  std::uint64_t seed = 42;
  double grad_tol = 1e-10;
  int max_iters = 5000;
  std::optional<int> samples;
};

// example: torus | su2-cubic | sun | circle | quaternion-span
Report cmd_verify(const std::string& example, const CommandOptions& opts);
Report cmd_find_zeros(const CommandOptions& opts);
Report cmd_stabilizer(const CommandOptions& opts);
Report cmd_homology(const CommandOptions& opts);
Report cmd_reduction(const CommandOptions& opts);
Report cmd_all(const CommandOptions& opts);

}  // namespace lagr
