#ifndef TRIGBVP_SHOOTING_HPP
#define TRIGBVP_SHOOTING_HPP

#include <cstddef>
#include <functional>
#include <utility>

#include "trigbvp/boundary.hpp"
#include "trigbvp/rk4.hpp"

namespace trigbvp {

struct ShootingOptions {
  std::size_t rk4_steps = 128;
  int max_iterations = 50;
  // Absolute boundary-residual tolerance, scaled by (1 + |alpha| + |beta|).
  double tolerance = 1e-7;
};

struct ShootResult {
  double ys = 0.0;
  double us = 0.0;
  int iterations = 0;
  // max |D * state - (alpha, beta)| at the returned initial data.
  double boundary_residual = 0.0;
  Trajectory trajectory;
};

// Root-finding on unknown initial data of the RK4-integrated problem.
// Neumann pins both initial values, so nothing is searched; Dirichlet and
// Mix1 pin y(s) and search y'(s) by secant; Mix2 leaves both free and sweeps
// coordinate-wise secant passes over the two conditions. Throws
// ShootingFailureError (carrying the last iterate) when the sweep stalls or
// the budget runs out.
ShootResult shoot(const std::function<double(double, double, double)>& f, double s,
                  double e, const BoundaryConditions& bc, BoundaryType type,
                  std::pair<double, double> initial_guess,
                  const ShootingOptions& options = {});

}  // namespace trigbvp

#endif  // TRIGBVP_SHOOTING_HPP
