#include "trigbvp/rk4.hpp"

#include <cmath>
#include <string>

#include "trigbvp/errors.hpp"

namespace trigbvp {

Trajectory rk4_ivp(const std::function<double(double, double, double)>& f, double s,
                   double e, double y0, double u0, std::size_t steps) {
  if (steps < 1) {
    throw InvalidInputError("rk4_ivp: steps must be >= 1");
  }
  if (!std::isfinite(y0) || !std::isfinite(u0)) {
    throw InvalidInputError("rk4_ivp: non-finite initial state");
  }

  Trajectory traj;
  traj.s = s;
  traj.e = e;
  traj.x.resize(steps + 1);
  traj.y.resize(steps + 1);
  traj.u.resize(steps + 1);

  const double h = (e - s) / static_cast<double>(steps);
  double x = s;
  double y = y0;
  double u = u0;
  traj.x[0] = x;
  traj.y[0] = y;
  traj.u[0] = u;

  for (std::size_t i = 0; i < steps; ++i) {
    const double k1y = u;
    const double k1u = f(x, y, u);
    const double k2y = u + 0.5 * h * k1u;
    const double k2u = f(x + 0.5 * h, y + 0.5 * h * k1y, u + 0.5 * h * k1u);
    const double k3y = u + 0.5 * h * k2u;
    const double k3u = f(x + 0.5 * h, y + 0.5 * h * k2y, u + 0.5 * h * k2u);
    const double k4y = u + h * k3u;
    const double k4u = f(x + h, y + h * k3y, u + h * k3u);

    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    x = s + static_cast<double>(i + 1) * h;

    if (!std::isfinite(y) || !std::isfinite(u)) {
      throw BlowUpError("rk4_ivp: state became non-finite at step " + std::to_string(i + 1), i);
    }
    traj.x[i + 1] = x;
    traj.y[i + 1] = y;
    traj.u[i + 1] = u;
  }
  return traj;
}

}  // namespace trigbvp
