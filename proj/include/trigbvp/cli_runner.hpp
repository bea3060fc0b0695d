#ifndef TRIGBVP_CLI_RUNNER_HPP
#define TRIGBVP_CLI_RUNNER_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace trigbvp {

namespace cli_exit {
inline constexpr int kOk = 0;
inline constexpr int kSpecError = 1;
inline constexpr int kSolverFailure = 2;
inline constexpr int kNoSolution = 3;
}  // namespace cli_exit

struct CliOptions {
  std::filesystem::path spec_path;
  std::filesystem::path out_dir;
  std::optional<int> q;
  std::optional<std::size_t> padding;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  bool require_solution = false;
};

// Subcommands: solve | study | rank-check | bench. Reports are written under
// out_dir; progress and results also go to `log`. Returns a cli_exit code.
int run_cli(const std::string& subcommand, const CliOptions& options, std::ostream& log,
            std::ostream& err);

}  // namespace trigbvp

#endif  // TRIGBVP_CLI_RUNNER_HPP
