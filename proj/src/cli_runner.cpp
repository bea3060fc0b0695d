#include "trigbvp/cli_runner.hpp"

#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "trigbvp/errors.hpp"
#include "trigbvp/problem_spec.hpp"
#include "trigbvp/rng.hpp"
#include "trigbvp/shooting.hpp"

namespace trigbvp {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json report_to_json(const SolveReport& report) {
  nlohmann::json j;
  j["solvability"] = solvability_name(report.solvability);
  j["rank_phi"] = report.rank_phi;
  j["rank_aug"] = report.rank_aug;
  j["condition_estimate"] = report.condition_estimate;
  j["residual_max"] = report.residual_max;
  j["boundary_errors"] = {report.boundary_errors[0], report.boundary_errors[1]};
  j["a0"] = report.a0;
  j["a1"] = report.a1;
  j["grid"] = {{"M", report.grid.M}, {"m", report.grid.m},   {"n", report.grid.n},
               {"s", report.grid.s}, {"e", report.grid.e},   {"delta", report.grid.delta},
               {"b", report.grid.b}, {"o", report.grid.o}};
  j["V"] = std::vector<double>(report.V.data(), report.V.data() + report.V.size());
  j["B"] = std::vector<double>(report.B.data(), report.B.data() + report.B.size());
  if (!report.newton_trace.empty()) {
    j["newton_trace"] = report.newton_trace;
    j["iterations"] = report.iterations();
  }
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InvalidInputError("cannot write output file '" + path.string() + "'");
  }
  out << text;
}

void write_solution_csv(const std::filesystem::path& path, const SolveReport& report,
                        std::size_t samples) {
  const SeriesSolution sol = report.solution();
  std::string csv = "x,y,dy,d2y\n";
  const std::size_t count = samples < 2 ? 2 : samples;
  for (std::size_t i = 0; i < count; ++i) {
    const double x = sol.s + (sol.e - sol.s) * static_cast<double>(i) /
                                 static_cast<double>(count - 1);
    csv += fmt17(x) + "," + fmt17(sol.eval(x, 0)) + "," + fmt17(sol.eval(x, 1)) + "," +
           fmt17(sol.eval(x, 2)) + "\n";
  }
  write_text(path, csv);
}

SolveReport run_solve(const ProblemSpec& spec) {
  const SolverSettings& st = spec.settings;
  if (spec.is_linear()) {
    LinearOptions options;
    options.rank_tolerance = st.rank_tolerance;
    options.ambiguity_band = st.ambiguity_band;
    return solve_linear(spec.linear_problem(), st.grid_size(), st.effective_padding(),
                        options);
  }
  return solve_nonlinear(spec.nonlinear_problem(), st.grid_size(), st.effective_padding(),
                         InitialGuess::automatic(), st.newton);
}

int cmd_solve(const ProblemSpec& spec, const CliOptions& options, std::ostream& log) {
  const SolveReport report = run_solve(spec);
  nlohmann::json j = report_to_json(report);
  if (spec.kind == ProblemSpec::Kind::Named) {
    const ErrorReport err = measure_error(report, spec.named_problem());
    j["max_grid_error"] = err.max_grid_error;
  }
  write_text(options.out_dir / "report.json", j.dump(2) + "\n");
  write_solution_csv(options.out_dir / "solution.csv", report, spec.settings.samples);
  log << "solvability=" << solvability_name(report.solvability)
      << " rank_phi=" << report.rank_phi << " rank_aug=" << report.rank_aug
      << " residual_max=" << fmt17(report.residual_max) << "\n";
  if (options.require_solution && report.solvability == Solvability::None) {
    return cli_exit::kNoSolution;
  }
  return cli_exit::kOk;
}

int cmd_rank_check(const ProblemSpec& spec, const CliOptions& options, std::ostream& log) {
  const SolverSettings& st = spec.settings;
  const LinearProblem problem = spec.linear_problem();
  const OdeGrid grid = build_grid(problem.s, problem.e, st.grid_size(), st.effective_padding());
  const SpectralOperators ops = make_operators(grid);
  const AssembledSystem sys = assemble_system(problem, grid, ops);
  const RankClassification rc = classify_solvability(sys.Phi, sys.Psi, st.rank_tolerance);

  nlohmann::json j;
  j["solvability"] = solvability_name(rc.solvability);
  j["rank_phi"] = rc.rank_phi;
  j["rank_aug"] = rc.rank_aug;
  j["dimension"] = grid.M + 1;
  j["sigma_max"] = rc.sigma_max;
  j["sigma_min"] = rc.sigma_min;
  write_text(options.out_dir / "rank.json", j.dump(2) + "\n");
  log << "solvability=" << solvability_name(rc.solvability) << " rank_phi=" << rc.rank_phi
      << " rank_aug=" << rc.rank_aug << " dim=" << grid.M + 1 << "\n";
  if (options.require_solution && rc.solvability == Solvability::None) {
    return cli_exit::kNoSolution;
  }
  return cli_exit::kOk;
}

int cmd_study(const ProblemSpec& spec, const CliOptions& options, std::ostream& log) {
  if (spec.kind != ProblemSpec::Kind::Named) {
    throw InvalidInputError("study requires a named problem with a known base solution");
  }
  const TestProblem problem = spec.named_problem();
  std::vector<StudySolver> solvers{StudySolver::Spectral};
  if (problem.btype == BoundaryType::Neumann) solvers.push_back(StudySolver::Rk4);

  const StudyTable table =
      convergence_study(problem, 6, 9, solvers, spec.settings.seed);

  std::string csv = "q";
  for (StudySolver solver : table.solvers) csv += "," + study_solver_name(solver);
  csv += ",note\n";
  for (const StudyRow& row : table.rows) {
    csv += std::to_string(row.q);
    std::string note;
    for (const StudyCell& cell : row.cells) {
      csv += ",";
      csv += cell.ok ? fmt17(cell.error) : "nan";
      if (!cell.note.empty()) note = cell.note;
    }
    csv += "," + note + "\n";
  }
  write_text(options.out_dir / "study.csv", csv);

  nlohmann::json j;
  j["problem"] = problem.name;
  for (std::size_t c = 0; c < table.solvers.size(); ++c) {
    j["strictly_decreasing"][study_solver_name(table.solvers[c])] =
        table.strictly_decreasing(c);
  }
  write_text(options.out_dir / "study.json", j.dump(2) + "\n");
  log << "study rows=" << table.rows.size() << "\n";
  return cli_exit::kOk;
}

int cmd_bench(const ProblemSpec& spec, const CliOptions& options, std::ostream& log) {
  if (spec.kind != ProblemSpec::Kind::Named) {
    throw InvalidInputError("bench requires a named problem or family");
  }

  std::vector<TestProblem> rows;
  if (spec.name == "homogeneous") {
    for (BoundaryType type : {BoundaryType::Neumann, BoundaryType::Dirichlet,
                              BoundaryType::Mix1, BoundaryType::Mix2}) {
      rows.push_back(make_homogeneous_problem(type, spec.beta_scale));
    }
  } else if (spec.name == "nonhomogeneous") {
    for (BoundaryType type : {BoundaryType::Neumann, BoundaryType::Dirichlet,
                              BoundaryType::Mix1, BoundaryType::Mix2}) {
      for (double theta : {kPi / 2.0, 3.0 * kPi / 2.0}) {
        rows.push_back(make_nonhomogeneous_problem(theta, type));
      }
    }
  } else {
    rows.push_back(spec.named_problem());
  }

  const SolverSettings& st = spec.settings;
  SplitMix64 rng(st.seed);
  std::string csv = "problem,type,theta,solvability,spectral,rk4,rk4_status,residual_max\n";

  for (const TestProblem& problem : rows) {
    std::string solvability = "error";
    std::string spectral = "nan";
    std::string residual = "nan";
    try {
      LinearOptions lin;
      lin.rank_tolerance = st.rank_tolerance;
      lin.ambiguity_band = st.ambiguity_band;
      const SolveReport report =
          solve_linear(problem.linear(), st.grid_size(), st.effective_padding(), lin);
      solvability = solvability_name(report.solvability);
      spectral = fmt17(measure_error(report, problem).max_grid_error);
      residual = fmt17(report.residual_max);
    } catch (const std::exception&) {
      // recorded in-row
    }

    // Benchmark trajectory: direct RK4 when the initial data is pinned,
    // shooting from a seeded random start otherwise.
    const std::pair<double, double> guess{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    auto f = [&problem](double x, double y, double u) {
      return problem.p(x) * u + problem.q(x) * y + problem.r(x);
    };
    ShootingOptions shoot_opts;
    shoot_opts.rk4_steps = st.grid_size();
    std::string rk4 = "nan";
    std::string status = "ok";
    try {
      const ShootResult shot =
          shoot(f, problem.s, problem.e, problem.bc, problem.btype, guess, shoot_opts);
      rk4 = fmt17(trajectory_error(shot.trajectory, problem));
    } catch (const ShootingFailureError& err) {
      status = "shooting-failure";
      try {
        const Trajectory traj =
            rk4_ivp(f, problem.s, problem.e, err.ys(), err.us(), shoot_opts.rk4_steps);
        rk4 = fmt17(trajectory_error(traj, problem));
      } catch (const std::exception&) {
        // leave nan
      }
    } catch (const std::exception&) {
      status = "error";
    }

    csv += problem.name + "," + boundary_type_name(problem.btype) + "," +
           (problem.kind == TestProblem::Kind::Nonhomogeneous ? fmt17(problem.theta) : "") +
           "," + solvability + "," + spectral + "," + rk4 + "," + status + "," + residual +
           "\n";
  }
  write_text(options.out_dir / "bench.csv", csv);
  log << "bench rows=" << rows.size() << "\n";
  return cli_exit::kOk;
}

}  // namespace

int run_cli(const std::string& subcommand, const CliOptions& options, std::ostream& log,
            std::ostream& err) {
  try {
    std::filesystem::create_directories(options.out_dir);
    ProblemSpec spec = ProblemSpec::load(options.spec_path);
    if (options.q) spec.settings.q = *options.q;
    if (spec.settings.q < 2 || spec.settings.q > 16) {
      throw InvalidInputError("q must lie in [2, 16]");
    }
    if (options.padding) spec.settings.padding = *options.padding;
    if (options.seed) spec.settings.seed = *options.seed;
    if (options.samples) spec.settings.samples = *options.samples;

    if (subcommand == "solve") return cmd_solve(spec, options, log);
    if (subcommand == "rank-check") return cmd_rank_check(spec, options, log);
    if (subcommand == "study") return cmd_study(spec, options, log);
    if (subcommand == "bench") return cmd_bench(spec, options, log);
    err << "unknown subcommand '" << subcommand << "'\n";
    return cli_exit::kSpecError;
  } catch (const NonConvergenceError& e) {
    err << "solver failure: " << e.what() << "\n";
    return cli_exit::kSolverFailure;
  } catch (const SingularJacobianError& e) {
    err << "solver failure: " << e.what() << "\n";
    return cli_exit::kSolverFailure;
  } catch (const ShootingFailureError& e) {
    err << "solver failure: " << e.what() << "\n";
    return cli_exit::kSolverFailure;
  } catch (const AmbiguousRankError& e) {
    err << "solver failure: " << e.what() << "\n";
    return cli_exit::kSolverFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return cli_exit::kSpecError;
  }
}

}  // namespace trigbvp
