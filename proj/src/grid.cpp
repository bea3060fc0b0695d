#include "trigbvp/grid.hpp"

#include <cmath>

#include "trigbvp/errors.hpp"
#include "trigbvp/fft.hpp"

namespace trigbvp {

OdeGrid build_grid(double s, double e, std::size_t M, std::size_t m) {
  if (!std::isfinite(s) || !std::isfinite(e) || !(s < e)) {
    throw InvalidInputError("build_grid: requires finite s < e");
  }
  if (M < 4 || !is_power_of_two(M)) {
    throw InvalidInputError("build_grid: M must be a power of two >= 4");
  }
  if (m == 0 || 2 * m >= M) {
    throw InvalidPaddingError("build_grid: padding index m must satisfy 0 < m < M/2");
  }

  OdeGrid g;
  g.M = M;
  g.m = m;
  g.n = M - 2 * m;
  g.s = s;
  g.e = e;
  g.delta = static_cast<double>(m) * (e - s) / static_cast<double>(g.n);
  g.b = (e - s) * static_cast<double>(M) / static_cast<double>(g.n);
  g.o = s - g.delta;
  g.lambda = g.b / static_cast<double>(M);
  g.points.resize(M + 1);
  for (std::size_t k = 0; k <= M; ++k) {
    g.points[k] = static_cast<double>(k) * g.lambda;
  }
  return g;
}

std::size_t default_padding(std::size_t M) {
  // A quarter of the cells per side; narrower padding concentrates the
  // window's transition and costs several digits at moderate M.
  return M / 4;
}

}  // namespace trigbvp
