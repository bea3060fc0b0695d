#ifndef TRIGBVP_LINEAR_SOLVER_HPP
#define TRIGBVP_LINEAR_SOLVER_HPP

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "trigbvp/boundary.hpp"
#include "trigbvp/grid.hpp"
#include "trigbvp/operators.hpp"

namespace trigbvp {

// y'' = p(x) y' + q(x) y + r(x) on [s, e]; the coefficient functions must be
// evaluable on the padded interval [s - delta, e + delta].
struct LinearProblem {
  std::function<double(double)> p;
  std::function<double(double)> q;
  std::function<double(double)> r;
  double s = 0.0;
  double e = 1.0;
  BoundaryConditions bc;
};

enum class Solvability { Unique, Infinite, None };

std::string solvability_name(Solvability s);

// Continuous reconstruction a1 + a0*t - (b/pi)^2 sum_j (B_j/j^2) sin(j*pi*t/b)
// in shifted coordinates t = x - o.
struct SeriesSolution {
  double a0 = 0.0;
  double a1 = 0.0;
  Eigen::VectorXd B;
  double b = 1.0;
  double o = 0.0;
  double s = 0.0;
  double e = 1.0;

  // order 0: value; 1: first derivative; 2: second derivative.
  double eval_shifted(double t, int order) const;
  // Original coordinates; restricted to [s, e].
  double eval(double x, int order) const;
};

struct SolveReport {
  Eigen::VectorXd V;
  double a0 = 0.0;
  double a1 = 0.0;
  Eigen::VectorXd B;
  Solvability solvability = Solvability::Unique;
  int rank_phi = 0;
  int rank_aug = 0;
  double condition_estimate = 0.0;
  double residual_max = 0.0;
  std::array<double, 2> boundary_errors{0.0, 0.0};
  OdeGrid grid;
  std::vector<double> newton_trace;  // empty for direct linear solves

  SeriesSolution solution() const;
  int iterations() const {
    return newton_trace.empty() ? 0 : static_cast<int>(newton_trace.size()) - 1;
  }
};

struct AssembledSystem {
  Eigen::MatrixXd Phi;
  Eigen::VectorXd Psi;
};

// Collocation system Phi*V = Psi: row 0 and row M carry the two boundary
// conditions, interior rows the ODE at the interior grid points with the
// window-weighted coefficient samples.
AssembledSystem assemble_system(const LinearProblem& problem, const OdeGrid& grid,
                                const SpectralOperators& ops);

struct RankClassification {
  Solvability solvability = Solvability::Unique;
  int rank_phi = 0;
  int rank_aug = 0;
  double sigma_max = 0.0;
  double sigma_min = 0.0;
};

// Rank comparison of Phi against the augmented [Phi | Psi]: full rank means
// a unique solution, a rank jump means none, agreement below full rank means
// infinitely many. `tolerance` is the relative singular-value cutoff.
RankClassification classify_solvability(const Eigen::MatrixXd& Phi,
                                        const Eigen::VectorXd& Psi, double tolerance);

struct LinearOptions {
  double rank_tolerance = 1e-10;
  // Ranks are re-counted at tolerance*band and tolerance/band; a mismatch
  // raises AmbiguousRankError instead of silently picking a class.
  double ambiguity_band = 2.0;
};

SolveReport solve_linear(const LinearProblem& problem, std::size_t M, std::size_t m,
                         const LinearOptions& options = {});

// order 0: value; 1: first derivative; 2: second derivative. x in [s, e].
double evaluate_solution(const SolveReport& report, double x, int order);

namespace detail {

// Recovers series coefficients from report.V, probes the windowed residual
// on a dense grid and records the boundary-condition errors. `rhs` is the
// full right-hand side f(x, v, u) in original coordinates.
void finish_report(SolveReport& report, const SpectralOperators& ops,
                   const BoundaryConditions& bc,
                   const std::function<double(double, double, double)>& rhs);

}  // namespace detail

}  // namespace trigbvp

#endif  // TRIGBVP_LINEAR_SOLVER_HPP
