#include "trigbvp/shooting.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "trigbvp/errors.hpp"

namespace trigbvp {

namespace {

struct Probe {
  Trajectory traj;
  Eigen::Vector2d res;
};

Probe evaluate(const std::function<double(double, double, double)>& f, double s, double e,
               const BoundaryConditions& bc, double ys, double us, std::size_t steps) {
  Probe p;
  p.traj = rk4_ivp(f, s, e, ys, us, steps);
  const Eigen::Vector4d state(ys, us, p.traj.y.back(), p.traj.u.back());
  p.res = bc.residual(state);
  return p;
}

// Secant iteration on a scalar objective; returns false when the slope
// degenerates or the budget runs out before |g| <= tol.
bool secant(const std::function<double(double)>& g, double& root, double tol,
            int max_iterations) {
  double x0 = root;
  double g0 = g(x0);
  if (std::abs(g0) <= tol) {
    root = x0;
    return true;
  }
  double x1 = x0 + std::max(1e-2, 0.1 * std::abs(x0));
  double g1 = g(x1);
  for (int it = 0; it < max_iterations; ++it) {
    if (std::abs(g1) <= tol) {
      root = x1;
      return true;
    }
    const double denom = g1 - g0;
    if (!std::isfinite(denom) || std::abs(denom) <= 1e-14 * (1.0 + std::abs(g1))) {
      root = x1;
      return false;
    }
    const double x2 = x1 - g1 * (x1 - x0) / denom;
    if (!std::isfinite(x2)) {
      root = x1;
      return false;
    }
    x0 = x1;
    g0 = g1;
    x1 = x2;
    g1 = g(x1);
  }
  root = x1;
  return std::abs(g1) <= tol;
}

}  // namespace

ShootResult shoot(const std::function<double(double, double, double)>& f, double s,
                  double e, const BoundaryConditions& bc, BoundaryType type,
                  std::pair<double, double> initial_guess, const ShootingOptions& options) {
  const double tol = options.tolerance * (1.0 + std::abs(bc.alpha) + std::abs(bc.beta));

  auto finish = [&](double ys, double us, int iterations) {
    Probe p = evaluate(f, s, e, bc, ys, us, options.rk4_steps);
    ShootResult out;
    out.ys = ys;
    out.us = us;
    out.iterations = iterations;
    out.boundary_residual = p.res.cwiseAbs().maxCoeff();
    out.trajectory = std::move(p.traj);
    return out;
  };

  switch (type) {
    case BoundaryType::Neumann: {
      // Both initial values are pinned; nothing to search.
      const Eigen::Vector2d init = bc.D.leftCols<2>().colPivHouseholderQr().solve(
          Eigen::Vector2d(bc.alpha, bc.beta));
      return finish(init(0), init(1), 0);
    }
    case BoundaryType::Dirichlet:
    case BoundaryType::Mix1: {
      const double ys = bc.alpha;  // row one is y(s) = alpha
      double us = initial_guess.second;
      int evals = 0;
      auto g = [&](double trial) {
        ++evals;
        return evaluate(f, s, e, bc, ys, trial, options.rk4_steps).res(1);
      };
      if (!secant(g, us, tol, options.max_iterations)) {
        const double res = std::abs(evaluate(f, s, e, bc, ys, us, options.rk4_steps).res(1));
        throw ShootingFailureError(
            "shoot: secant search on y'(s) failed (boundary residual " + std::to_string(res) +
                ")",
            ys, us, res);
      }
      return finish(ys, us, evals);
    }
    case BoundaryType::Mix2: {
      double ys = initial_guess.first;
      double us = initial_guess.second;
      for (int sweep = 0; sweep < options.max_iterations; ++sweep) {
        auto g0 = [&](double trial) {
          return evaluate(f, s, e, bc, trial, us, options.rk4_steps).res(0);
        };
        const bool ok0 = secant(g0, ys, tol, 20);
        auto g1 = [&](double trial) {
          return evaluate(f, s, e, bc, ys, trial, options.rk4_steps).res(1);
        };
        const bool ok1 = secant(g1, us, tol, 20);

        const Probe p = evaluate(f, s, e, bc, ys, us, options.rk4_steps);
        const double worst = p.res.cwiseAbs().maxCoeff();
        if (worst <= tol) {
          return finish(ys, us, sweep + 1);
        }
        if (!ok0 || !ok1) {
          throw ShootingFailureError(
              "shoot: coordinate search stalled on a boundary condition (residual " +
                  std::to_string(worst) + ")",
              ys, us, worst);
        }
      }
      const Probe p = evaluate(f, s, e, bc, ys, us, options.rk4_steps);
      const double worst = p.res.cwiseAbs().maxCoeff();
      throw ShootingFailureError(
          "shoot: boundary conditions not met after " + std::to_string(options.max_iterations) +
              " sweeps (residual " + std::to_string(worst) + ")",
          ys, us, worst);
    }
  }
  throw InvalidInputError("shoot: unknown boundary type");
}

}  // namespace trigbvp
