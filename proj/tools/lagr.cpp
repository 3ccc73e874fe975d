#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lagr/commands.hpp"

namespace {

enum ExitCode { kPass = 0, kFailure = 1, kUsage = 2 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lagr: numerical and exact checks for Lagrangian orbits of Hamiltonian actions"};
  app.require_subcommand(1);

  lagr::CommandOptions opts;
  int n = 0;
  int samples = 0;
  std::string json_path;
  bool quiet = false;
  bool timing = false;
  std::string example;

  app.add_option("--starts", opts.starts, "Random starts for find-zeros")->check(CLI::PositiveNumber);
  app.add_option("--seed", opts.seed, "Seed for every random draw");
  app.add_option("--grad-tol", opts.grad_tol, "Gradient norm at which descent stops")->check(CLI::PositiveNumber);
  app.add_option("--max-iters", opts.max_iters, "Descent iteration cap")->check(CLI::PositiveNumber);
  CLI::Option* n_opt = app.add_option("--n", n, "Dimension parameter of the example");
  CLI::Option* samples_opt = app.add_option("--samples", samples, "Sample count for stabilizer/reduction");
  app.add_option("--json", json_path, "Write the JSON report to PATH (- for stdout)");
  app.add_flag("--quiet", quiet, "Suppress the human-readable summary");
  app.add_flag("--timing", timing, "Include elapsed_ms in JSON reports");
  app.fallthrough();

  CLI::App* verify = app.add_subcommand("verify", "Moment map, Hamilton, equivariance and Lagrangian checks");
  verify->add_option("example", example, "torus | su2-cubic | sun | circle | quaternion-span")->required();
  app.add_subcommand("find-zeros", "Multi-start search for zeros of the su2-cubic moment map");
  app.add_subcommand("stabilizer", "Stabilizer of [x^3 + y^3] and its projective image");
  app.add_subcommand("homology", "Homology and cohomology of the quotient space form");
  app.add_subcommand("reduction", "Lagrangian embedding of the circle-reduction level set");
  app.add_subcommand("all", "Run every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (*n_opt) opts.n = n;
  if (*samples_opt) opts.samples = samples;

  lagr::Report report;
  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "verify") {
      report = lagr::cmd_verify(example, opts);
    } else if (cmd == "find-zeros") {
      report = lagr::cmd_find_zeros(opts);
    } else if (cmd == "stabilizer") {
      report = lagr::cmd_stabilizer(opts);
    } else if (cmd == "homology") {
      report = lagr::cmd_homology(opts);
    } else if (cmd == "reduction") {
      report = lagr::cmd_reduction(opts);
    } else {
      report = lagr::cmd_all(opts);
    }
  } catch (const lagr::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }

  if (!quiet) std::cout << report.summary();
  if (!json_path.empty()) {
    const std::string text = report.to_json(timing).dump(2) + "\n";
    if (json_path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(json_path, std::ios::binary);
      if (!out || !(out << text)) {
        std::cerr << "error: cannot write " << json_path << '\n';
        return kFailure;
      }
    }
  }
  if (!quiet) {
    std::cout << (report.ok() ? "PASS" : "FAIL") << " (" << report.failures() << " failed checks)\n";
  }
  return report.ok() ? kPass : kFailure;
}
