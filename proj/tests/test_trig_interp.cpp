#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "trigbvp/errors.hpp"
#include "trigbvp/rng.hpp"
#include "trigbvp/trig_interp.hpp"

using namespace trigbvp;

namespace {

constexpr double kPi = std::numbers::pi;

// O(N^2) coefficient sum: a_j = (2/N) sum_k (-1)^j y_k sin(2 pi j k / N).
std::vector<double> direct_sine_coeffs(const std::vector<double>& samples) {
  const std::size_t n = samples.size();
  const std::size_t m = n / 2;
  std::vector<double> coeffs(m - 1);
  for (std::size_t j = 1; j < m; ++j) {
    double acc = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
      acc += samples[k] * std::sin(2.0 * kPi * static_cast<double>(j * k) / static_cast<double>(n));
    }
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    coeffs[j - 1] = sign * 2.0 / static_cast<double>(n) * acc;
  }
  return coeffs;
}

std::vector<double> sample_odd(const std::function<double(double)>& f, double b,
                               std::size_t n) {
  std::vector<double> samples(n);
  for (std::size_t k = 0; k < n; ++k) {
    samples[k] = f(-b + 2.0 * b * static_cast<double>(k) / static_cast<double>(n));
  }
  return samples;
}

}  // namespace

TEST_CASE("sine basis function reproduces itself") {
  const double b = 1.7;
  const auto samples = sample_odd([b](double x) { return std::sin(kPi * x / b); }, b, 8);
  const OddTrigPoly poly = interpolate_odd(samples, b);
  REQUIRE(poly.coeffs().size() == 3);
  CHECK(poly.coeffs()[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(poly.coeffs()[1]) < 1e-12);
  CHECK(std::abs(poly.coeffs()[2]) < 1e-12);
}

TEST_CASE("zero samples give zero coefficients") {
  const OddTrigPoly poly = interpolate_odd(std::vector<double>(8, 0.0), 2.0);
  for (double c : poly.coeffs()) CHECK(c == 0.0);
}

TEST_CASE("fft coefficients match the direct sum") {
  const double b = 2.5;
  for (std::size_t n : {4u, 8u, 16u, 32u, 64u, 128u, 256u}) {
    const auto samples =
        sample_odd([b](double x) { return x * (b - std::abs(x)); }, b, n);
    const OddTrigPoly poly = interpolate_odd(samples, b);
    const auto direct = direct_sine_coeffs(samples);
    for (std::size_t j = 0; j < direct.size(); ++j) {
      CHECK(std::abs(poly.coeffs()[j] - direct[j]) <= 1e-12);
    }
  }
}

TEST_CASE("interpolation exactness at the sample grid") {
  const double b = 1.3;
  SplitMix64 rng(42);
  const std::size_t n = 64;
  std::vector<double> samples(n);
  samples[0] = 0.0;
  samples[n / 2] = 0.0;
  for (std::size_t k = 1; k < n / 2; ++k) {
    samples[k] = rng.uniform(-1.0, 1.0);
    samples[n - k] = -samples[k];  // odd symmetry of the sampled function
  }
  double scale = 0.0;
  for (double s : samples) scale = std::max(scale, std::abs(s));

  const OddTrigPoly poly = interpolate_odd(samples, b);
  for (std::size_t k = 0; k < n; ++k) {
    const double x = -b + 2.0 * b * static_cast<double>(k) / static_cast<double>(n);
    CHECK(std::abs(poly.eval(x) - samples[k]) <= 1e-10 * scale);
  }
}

TEST_CASE("single-mode evaluations") {
  const OddTrigPoly poly(kPi, {1.0, 0.0, 0.0});
  CHECK(poly.eval(kPi / 2.0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(poly.eval(0.0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(poly.eval(kPi / 2.0, 2) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_THROWS_AS(poly.eval(0.0, 3), InvalidInputError);
}

TEST_CASE("odd symmetry of the evaluation") {
  SplitMix64 rng(7);
  std::vector<double> coeffs(15);
  for (double& c : coeffs) c = rng.uniform(-2.0, 2.0);
  const OddTrigPoly poly(1.9, coeffs);
  for (int i = 0; i < 50; ++i) {
    const double x = rng.uniform(-4.0, 4.0);
    CHECK(std::abs(poly.eval(x) + poly.eval(-x)) <= 1e-12);
  }
}

TEST_CASE("derivative evaluations match finite differences") {
  SplitMix64 rng(11);
  std::vector<double> coeffs(15);
  for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
  const double b = 2.2;
  const OddTrigPoly poly(b, coeffs);
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const double x = rng.uniform(-b, b);
    const double fd1 = (poly.eval(x + h) - poly.eval(x - h)) / (2.0 * h);
    const double fd2 = (poly.eval(x + h, 1) - poly.eval(x - h, 1)) / (2.0 * h);
    CHECK(std::abs(poly.eval(x, 1) - fd1) <= 1e-6 * (1.0 + std::abs(fd1)));
    CHECK(std::abs(poly.eval(x, 2) - fd2) <= 1e-6 * (1.0 + std::abs(fd2)));
  }
}

TEST_CASE("interpolate_odd rejects bad input") {
  CHECK_THROWS_AS(interpolate_odd(std::vector<double>(6, 0.0), 1.0), InvalidInputError);
  CHECK_THROWS_AS(interpolate_odd(std::vector<double>(2, 0.0), 1.0), InvalidInputError);
  std::vector<double> bad(8, 0.0);
  bad[3] = std::nan("");
  CHECK_THROWS_AS(interpolate_odd(bad, 1.0), InvalidInputError);
  CHECK_THROWS_AS(OddTrigPoly(-1.0, std::vector<double>(3, 0.0)), InvalidInputError);
}

TEST_CASE("cutoff window values") {
  const CutoffSpec spec(1.0, 3.0, 0.5);
  CHECK(cutoff_eval(spec, 2.0) == 1.0);
  CHECK(cutoff_eval(spec, 1.0) == 1.0);
  CHECK(cutoff_eval(spec, 3.0) == 1.0);
  CHECK(cutoff_eval(spec, 0.4) == 0.0);
  CHECK(cutoff_eval(spec, 3.6) == 0.0);
  CHECK(cutoff_eval(spec, 0.5) == 0.0);
  CHECK(cutoff_eval(spec, 3.5) == 0.0);

  // Midpoint of the left transition band sits exactly at 1/2; general points
  // mirror to 1 within the band.
  const double mid = cutoff_eval(spec, 0.75);
  CHECK(mid > 0.0);
  CHECK(mid < 1.0);
  CHECK(mid == doctest::Approx(0.5).epsilon(1e-14));
  for (double t : {0.55, 0.6, 0.7, 0.85, 0.95}) {
    CHECK(cutoff_eval(spec, t) + cutoff_eval(spec, 1.5 - t) == doctest::Approx(1.0).epsilon(1e-13));
    const double right = cutoff_eval(spec, 3.5 - (t - 0.5));
    CHECK(cutoff_eval(spec, t) == doctest::Approx(right).epsilon(1e-13));
  }
  CHECK_THROWS_AS(CutoffSpec(3.0, 1.0, 0.5), InvalidInputError);
  CHECK_THROWS_AS(CutoffSpec(1.0, 3.0, -0.5), InvalidInputError);
}

TEST_CASE("cutoff window is smooth across the band edges") {
  const CutoffSpec spec(1.0, 3.0, 0.5);
  const double h = 1e-5;
  auto d1 = [&](double x) {
    return (cutoff_eval(spec, x + h) - cutoff_eval(spec, x - h)) / (2.0 * h);
  };
  auto d2 = [&](double x) {
    return (cutoff_eval(spec, x + h) - 2.0 * cutoff_eval(spec, x) + cutoff_eval(spec, x - h)) /
           (h * h);
  };
  // Difference quotients stay continuous through the edges: no jumps above
  // 1e-3 between neighboring probes.
  for (double edge : {0.5, 1.0, 3.0, 3.5}) {
    for (int i = -5; i < 5; ++i) {
      const double x = edge + static_cast<double>(i) * h;
      CHECK(std::abs(d1(x + h) - d1(x)) <= 1e-3);
      CHECK(std::abs(d2(x + h) - d2(x)) <= 1e-3 * (1.0 + std::abs(d2(x))));
    }
  }
}

TEST_CASE("monotone transitions") {
  const CutoffSpec spec(0.0, 1.0, 1.0);
  double last = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = -1.0 + static_cast<double>(i) / 100.0;
    const double v = cutoff_eval(spec, x);
    CHECK(v >= last - 1e-15);
    last = v;
  }
}

TEST_CASE("smooth_extend of zero is zero") {
  const ShiftedTrigPoly ext =
      smooth_extend([](double) { return 0.0; }, CutoffSpec(1.0, 3.0, 0.5), 64);
  for (double c : ext.poly.coeffs()) CHECK(c == 0.0);
}

TEST_CASE("smooth_extend reproduces a constant at grid points inside [s, e]") {
  const CutoffSpec spec(1.0, 3.0, 0.5);
  const ShiftedTrigPoly ext = smooth_extend([](double) { return 1.0; }, spec, 128);
  const double b = ext.poly.half_period();
  const std::size_t n = 128;
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double t = 2.0 * b * static_cast<double>(k) / static_cast<double>(n);
    const double x = t + ext.offset;
    if (x >= spec.s && x <= spec.e) {
      CHECK(std::abs(ext.eval(x) - 1.0) <= 1e-10);
    }
  }
}

TEST_CASE("smooth_extend tracks a smooth function off the grid") {
  // Padding chosen as the grid construction would: one tenth of the cells
  // per side, so delta = 26 * 2 / 204.
  const double delta = 26.0 * 2.0 / 204.0;
  const CutoffSpec spec(1.0, 3.0, delta);
  auto f = [](double x) { return x * std::cos(kPi * x / 2.0); };

  auto max_err = [&](std::size_t n) {
    const ShiftedTrigPoly ext = smooth_extend(f, spec, n);
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double x = 1.0 + 2.0 * static_cast<double>(i) / 1000.0;
      worst = std::max(worst, std::abs(ext.eval(x) - f(x)));
    }
    return worst;
  };

  CHECK(max_err(512) < 1e-6);  // measured 5.7e-08
  CHECK(max_err(256) < 1e-4);  // measured 9.3e-06; superalgebraic decay in N
}

TEST_CASE("smooth_extend propagates non-finite values") {
  const CutoffSpec spec(0.0, 1.0, 0.25);
  CHECK_THROWS_AS(
      smooth_extend([](double x) { return 1.0 / (x - 0.5); }, spec, 64),
      InvalidInputError);
}
