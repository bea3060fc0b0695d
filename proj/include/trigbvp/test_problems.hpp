#ifndef TRIGBVP_TEST_PROBLEMS_HPP
#define TRIGBVP_TEST_PROBLEMS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trigbvp/linear_solver.hpp"
#include "trigbvp/newton_solver.hpp"
#include "trigbvp/rk4.hpp"

namespace trigbvp {

// A manufactured linear problem on [1, 3] with a known base solution, used
// by the studies and by the command-line bench tables.
struct TestProblem {
  enum class Kind { Homogeneous, Nonhomogeneous };

  Kind kind = Kind::Homogeneous;
  BoundaryType btype = BoundaryType::Neumann;
  double theta = 0.0;       // oscillation parameter (nonhomogeneous family)
  double beta_scale = 1.0;  // scales the consistent beta to probe solvability
  double s = 1.0;
  double e = 3.0;
  BoundaryConditions bc;
  Solvability expected = Solvability::Unique;
  std::string name;

  std::function<double(double)> exact;
  std::function<double(double)> exact_prime;
  std::function<double(double)> p;
  std::function<double(double)> q;
  std::function<double(double)> r;

  LinearProblem linear() const;
  NonlinearProblem lifted() const;
};

// y'' + 2*pi*y' + (5/4)*pi^2*y = 0 on [1, 3] with the decaying oscillatory
// base solution; alpha/beta derive from the base, beta optionally scaled.
// Expected solvability: Neumann/Mix1 unique; Dirichlet/Mix2 infinite at
// beta_scale = 1 and none otherwise.
TestProblem make_homogeneous_problem(BoundaryType type, double beta_scale = 1.0);

// y'' = p*y' + q*y + r with base solution x*cos(theta*x) on [1, 3];
// r is built so the base solves the equation exactly.
TestProblem make_nonhomogeneous_problem(double theta, BoundaryType type,
                                        double p_const = 0.1, double q_const = 1.0);

struct ErrorReport {
  double max_grid_error = 0.0;
  double residual_max = 0.0;
  std::array<double, 2> boundary_errors{0.0, 0.0};
};

// Error of a solve against the base solution on the 2^7-point measurement
// grid over [s, e] (the reporting convention for every table).
ErrorReport measure_error(const SolveReport& report, const TestProblem& problem);

// Max error of an RK4/shooting trajectory against the base solution over
// its nodes in [s, e].
double trajectory_error(const Trajectory& traj, const TestProblem& problem);

enum class StudySolver { Spectral, Rk4 };

std::string study_solver_name(StudySolver solver);

struct StudyCell {
  bool ok = false;
  double error = 0.0;
  std::string note;
};

struct StudyRow {
  int q = 0;
  std::vector<StudyCell> cells;
};

struct StudyTable {
  std::vector<StudySolver> solvers;
  std::vector<StudyRow> rows;

  // True when the column's errors strictly decrease over successful rows.
  bool strictly_decreasing(std::size_t column) const;
};

// One row per q in [q_lo, q_hi], one column per solver; individual solve
// failures are recorded in the cell, never fatal. RK4 runs 2^q steps; for
// boundary types that do not pin the initial data the trajectory comes from
// the shooting search with a seeded random start.
StudyTable convergence_study(const TestProblem& problem, int q_lo, int q_hi,
                             const std::vector<StudySolver>& solvers,
                             std::uint64_t seed = 0);

}  // namespace trigbvp

#endif  // TRIGBVP_TEST_PROBLEMS_HPP
