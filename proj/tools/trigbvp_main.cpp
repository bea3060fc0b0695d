// Command-line front end: solve | study | rank-check | bench over a JSON
// problem spec; see README for the spec schema.
#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "trigbvp/cli_runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sine-series collocation solver for two-point boundary value problems"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string out_dir = ".";
  int q = -1;
  long long padding = -1;
  long long seed = -1;
  long long samples = -1;
  bool require_solution = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_path, "Problem spec file (JSON)")->required();
    cmd->add_option("--out", out_dir, "Output directory for reports");
    cmd->add_option("--q", q, "Grid exponent: M = 2^q");
    cmd->add_option("--padding", padding, "Padding index m (0 < m < M/2)");
    cmd->add_option("--seed", seed, "Seed for randomized shooting guesses");
    cmd->add_option("--samples", samples, "Sample count for solution.csv");
    cmd->add_flag("--require-solution", require_solution,
                  "Exit with status 3 when the problem has no solution");
  };

  add_common(app.add_subcommand("solve", "Solve a problem and write report.json/solution.csv"));
  add_common(app.add_subcommand("study", "Convergence study over q = 6..9"));
  add_common(app.add_subcommand("rank-check", "Classify solvability of the linear system"));
  add_common(app.add_subcommand("bench", "Benchmark table over the named problem corpus"));

  CLI11_PARSE(app, argc, argv);

  trigbvp::CliOptions options;
  options.spec_path = spec_path;
  options.out_dir = out_dir;
  if (q >= 0) options.q = q;
  if (padding >= 0) options.padding = static_cast<std::size_t>(padding);
  if (seed >= 0) options.seed = static_cast<std::uint64_t>(seed);
  if (samples >= 0) options.samples = static_cast<std::size_t>(samples);
  options.require_solution = require_solution;

  const std::string subcommand = app.get_subcommands().front()->get_name();
  return trigbvp::run_cli(subcommand, options, std::cout, std::cerr);
}
