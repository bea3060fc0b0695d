#ifndef TRIGBVP_RK4_HPP
#define TRIGBVP_RK4_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace trigbvp {

// Sampled solution of the first-order system (y, u)' = (u, f(x, y, u)).
struct Trajectory {
  double s = 0.0;
  double e = 1.0;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> u;
};

// Classic fourth-order Runge-Kutta over `steps` uniform steps from s to e
// (e < s integrates backwards). Throws BlowUpError when the state leaves the
// finite range, carrying the last valid step index.
Trajectory rk4_ivp(const std::function<double(double, double, double)>& f, double s,
                   double e, double y0, double u0, std::size_t steps);

}  // namespace trigbvp

#endif  // TRIGBVP_RK4_HPP
