#include "trigbvp/trig_interp.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "trigbvp/errors.hpp"
#include "trigbvp/fft.hpp"

namespace trigbvp {

namespace {

constexpr double kPi = std::numbers::pi;

// exp(-1/t) continued by 0 at t <= 0; all derivatives vanish at 0.
double bump_seed(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// Monotone C-infinity step: 0 for t <= 0, 1 for t >= 1.
double bump_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double g = bump_seed(t);
  return g / (g + bump_seed(1.0 - t));
}

}  // namespace

OddTrigPoly::OddTrigPoly(double half_period, std::vector<double> coeffs)
    : half_period_(half_period), coeffs_(std::move(coeffs)) {
  if (!(half_period_ > 0.0) || !std::isfinite(half_period_)) {
    throw InvalidInputError("OddTrigPoly: half period must be positive and finite");
  }
  if (!is_power_of_two(coeffs_.size() + 1)) {
    throw InvalidInputError("OddTrigPoly: coefficient count must be M-1 with M a power of two");
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw InvalidInputError("OddTrigPoly: non-finite coefficient");
  }
}

double OddTrigPoly::eval(double x, int order) const {
  if (order < 0 || order > 2) {
    throw InvalidInputError("OddTrigPoly::eval: order must be 0, 1 or 2");
  }
  const double w = kPi / half_period_;
  double acc = 0.0;
  for (std::size_t j = 1; j <= coeffs_.size(); ++j) {
    const double jw = static_cast<double>(j) * w;
    const double a = coeffs_[j - 1];
    switch (order) {
      case 0: acc += a * std::sin(jw * x); break;
      case 1: acc += a * jw * std::cos(jw * x); break;
      default: acc -= a * jw * jw * std::sin(jw * x); break;
    }
  }
  return acc;
}

CutoffSpec::CutoffSpec(double s_, double e_, double delta_) : s(s_), e(e_), delta(delta_) {
  if (!(s < e) || !std::isfinite(s) || !std::isfinite(e)) {
    throw InvalidInputError("CutoffSpec: requires s < e, both finite");
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InvalidInputError("CutoffSpec: delta must be positive and finite");
  }
}

double cutoff_eval(const CutoffSpec& spec, double x) {
  if (x >= spec.s && x <= spec.e) return 1.0;
  if (x <= spec.s - spec.delta || x >= spec.e + spec.delta) return 0.0;
  if (x < spec.s) return bump_step((x - (spec.s - spec.delta)) / spec.delta);
  return bump_step(((spec.e + spec.delta) - x) / spec.delta);
}

OddTrigPoly interpolate_odd(const std::vector<double>& samples, double half_period) {
  const std::size_t n = samples.size();
  if (n < 4 || !is_power_of_two(n)) {
    throw InvalidInputError("interpolate_odd: sample count must be a power of two >= 4");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(samples[k])) {
      throw InvalidInputError("interpolate_odd: non-finite sample at index " + std::to_string(k));
    }
  }

  std::vector<std::complex<double>> buf(n);
  for (std::size_t k = 0; k < n; ++k) buf[k] = samples[k];
  buf = inverse_dft(std::move(buf));

  // a_j * (-1)^j = 2 * Imag(idft(samples))_j for 1 <= j < M, M = N/2.
  const std::size_t m = n / 2;
  std::vector<double> coeffs(m - 1);
  for (std::size_t j = 1; j < m; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    coeffs[j - 1] = sign * 2.0 * buf[j].imag();
  }
  return OddTrigPoly(half_period, std::move(coeffs));
}

ShiftedTrigPoly smooth_extend(const std::function<double(double)>& f,
                              const CutoffSpec& spec, std::size_t n_samples) {
  if (n_samples < 4 || !is_power_of_two(n_samples)) {
    throw InvalidInputError("smooth_extend: sample count must be a power of two >= 4");
  }
  const double o = spec.s - spec.delta;
  const double b = spec.e + spec.delta - o;

  // Sample h*f over (0, b], odd-reflect for negative abscissae. Where the
  // window vanishes the product is exactly 0 and f is not consulted.
  auto windowed = [&](double t) -> double {
    const double h = cutoff_eval(spec, t + o);
    if (h == 0.0) return 0.0;
    const double v = f(t + o);
    if (!std::isfinite(v)) {
      throw InvalidInputError("smooth_extend: function value is not finite");
    }
    return h * v;
  };

  const double step = 2.0 * b / static_cast<double>(n_samples);
  std::vector<double> samples(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) {
    const double x = -b + static_cast<double>(k) * step;
    samples[k] = x >= 0.0 ? windowed(x) : -windowed(-x);
  }
  return ShiftedTrigPoly{interpolate_odd(samples, b), o};
}

}  // namespace trigbvp
