#ifndef TRIGBVP_TRIG_INTERP_HPP
#define TRIGBVP_TRIG_INTERP_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace trigbvp {

// Finite sine series sum_{j=1}^{M-1} a_j sin(j*pi*x/b): odd about 0 and
// periodic with period 2b. Immutable after construction.
class OddTrigPoly {
 public:
  OddTrigPoly(double half_period, std::vector<double> coeffs);

  double half_period() const noexcept { return half_period_; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  // M: the series has M-1 sine terms.
  std::size_t mode_count() const noexcept { return coeffs_.size() + 1; }

  // order 0: value; 1: first derivative; 2: second derivative.
  double eval(double x, int order = 0) const;

 private:
  double half_period_;
  std::vector<double> coeffs_;
};

// C-infinity window: exactly 1 on [s, e], exactly 0 outside [s-delta, e+delta],
// strictly monotone on each transition band.
struct CutoffSpec {
  double s;
  double e;
  double delta;

  CutoffSpec(double s_, double e_, double delta_);
};

double cutoff_eval(const CutoffSpec& spec, double x);

// Sine interpolant of samples of an odd 2b-periodic function taken at
// x_k = -b + k*(2b/N), k = 0..N-1, with N a power of two >= 4.
// Coefficients are computed through the inverse FFT.
OddTrigPoly interpolate_odd(const std::vector<double>& samples, double half_period);

// A sine series evaluated in shifted coordinates: value at x is the series
// at x - offset. Produced by smooth_extend, where offset = s - delta.
struct ShiftedTrigPoly {
  OddTrigPoly poly;
  double offset;

  double eval(double x, int order = 0) const { return poly.eval(x - offset, order); }
};

// Windowed periodic extension: interpolates h*f on [0, b] (b = e - s + 2*delta)
// after the shift by o = s - delta, treating the product as odd 2b-periodic.
// The result matches f at every sample point inside [s, e].
ShiftedTrigPoly smooth_extend(const std::function<double(double)>& f,
                              const CutoffSpec& spec, std::size_t n_samples);

}  // namespace trigbvp

#endif  // TRIGBVP_TRIG_INTERP_HPP
