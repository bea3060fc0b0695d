#ifndef TRIGBVP_NEWTON_SOLVER_HPP
#define TRIGBVP_NEWTON_SOLVER_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <functional>

#include "trigbvp/linear_solver.hpp"

namespace trigbvp {

// Right-hand side f(x, v, u) of v'' = f(x, v, v') with its partial
// derivatives in v and u.
struct NonlinearRHS {
  std::function<double(double, double, double)> f;
  std::function<double(double, double, double)> df_dv;
  std::function<double(double, double, double)> df_du;
};

// Lift a linear problem's coefficients through the nonlinear interface.
NonlinearRHS lift_linear(const LinearProblem& problem);

// Worst relative deviation between the stored partials and central finite
// differences of f over the box [x_lo, x_hi] x [-v_scale, v_scale] x
// [-u_scale, u_scale], sampled at `samples` deterministic points.
double partial_consistency(const NonlinearRHS& rhs, double x_lo, double x_hi,
                           double v_scale, double u_scale, int samples = 32);

struct NonlinearProblem {
  NonlinearRHS rhs;
  double s = 0.0;
  double e = 1.0;
  BoundaryConditions bc;
};

struct NewtonOptions {
  int max_iterations = 50;
  // Scaled by (1 + |alpha| + |beta|) before use.
  double residual_tolerance = 1e-10;
  // Scaled by (1 + max|V|); a step this small also counts as converged.
  double step_tolerance = 1e-13;
  // Backtracking halves the Newton step down to this floor.
  double min_step = 1.0 / 1024.0;
  // Check df_dv/df_du against finite differences before iterating.
  bool validate_partials = true;
};

struct InitialGuess {
  enum class Kind { Automatic, Vector };
  Kind kind = Kind::Automatic;
  Eigen::VectorXd V;

  static InitialGuess automatic() { return {}; }
  static InitialGuess from_vector(Eigen::VectorXd v) {
    InitialGuess g;
    g.kind = Kind::Vector;
    g.V = std::move(v);
    return g;
  }
};

// Residual of the collocated system at grid values V: rows 0 and M are the
// boundary conditions, interior rows the ODE rows. Zero exactly on solutions
// of the discretized system; coincides with Phi*V - Psi when f is linear.
Eigen::VectorXd nonlinear_residual(const Eigen::VectorXd& V, const NonlinearProblem& problem,
                                   const OdeGrid& grid, const SpectralOperators& ops);

// Closed-form Jacobian of nonlinear_residual; equals Phi when f is linear.
Eigen::MatrixXd nonlinear_jacobian(const Eigen::VectorXd& V, const NonlinearProblem& problem,
                                   const OdeGrid& grid, const SpectralOperators& ops);

// Damped Newton on the collocated system. The automatic initial guess uses a
// windowed RK4 sweep when the boundary rows pin (v(s), v'(s)) and a least-
// squares straight line otherwise.
SolveReport solve_nonlinear(const NonlinearProblem& problem, std::size_t M, std::size_t m,
                            const InitialGuess& guess = InitialGuess::automatic(),
                            const NewtonOptions& options = {});

}  // namespace trigbvp

#endif  // TRIGBVP_NEWTON_SOLVER_HPP
