#ifndef TRIGBVP_GRID_HPP
#define TRIGBVP_GRID_HPP

#include <cstddef>
#include <vector>

#include "trigbvp/trig_interp.hpp"

namespace trigbvp {

// Equispaced collocation grid x_k = k*b/M, k = 0..M, on the padded domain
// [0, b]. The original interval [s, e] occupies indices m..m+n (n = M-2m);
// original coordinates are recovered by adding the offset o = s - delta.
struct OdeGrid {
  std::size_t M = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  double s = 0.0;
  double e = 1.0;
  double delta = 0.0;
  double b = 1.0;
  double o = 0.0;
  double lambda = 0.0;
  std::vector<double> points;

  double to_original(double t) const noexcept { return t + o; }
  double to_computational(double x) const noexcept { return x - o; }
  CutoffSpec cutoff() const { return CutoffSpec(s, e, delta); }
};

// Padding closure: delta = m*(e-s)/(M-2m) puts s and e exactly on grid
// indices m and M-m.
OdeGrid build_grid(double s, double e, std::size_t M, std::size_t m);

// The resolution knob is q with M = 2^q; default padding index.
std::size_t default_padding(std::size_t M);

}  // namespace trigbvp

#endif  // TRIGBVP_GRID_HPP
