#include "trigbvp/operators.hpp"

#include <cmath>
#include <numbers>

#include "trigbvp/errors.hpp"
#include "trigbvp/fft.hpp"

namespace trigbvp {

namespace {

constexpr double kPi = std::numbers::pi;

// Cot(k*pi/N) with the convention that arguments at integer multiples of pi
// (k % N == 0) give 0.
double cot_at(std::ptrdiff_t k, std::size_t big_n) {
  const auto n = static_cast<std::ptrdiff_t>(big_n);
  if (k % n == 0) return 0.0;
  const double a = kPi * static_cast<double>(k) / static_cast<double>(n);
  return std::cos(a) / std::sin(a);
}

double sign_pm(std::size_t k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_S_C(std::size_t M) {
  if (M < 2 || !is_power_of_two(M)) {
    throw InvalidInputError("build_S_C: M must be a power of two >= 2");
  }
  const auto dim = static_cast<Eigen::Index>(M - 1);
  Eigen::MatrixXd S(dim, dim);
  Eigen::MatrixXd C(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      // 2*pi*j*k/N with N = 2M.
      const double angle = kPi * static_cast<double>((j + 1) * (k + 1)) /
                           static_cast<double>(M);
      S(j, k) = std::sin(angle);
      C(j, k) = std::cos(angle);
    }
  }
  return {std::move(S), std::move(C)};
}

Eigen::MatrixXd build_theta(const Eigen::MatrixXd& S, std::size_t M) {
  if (S.rows() != S.cols() || S.rows() != static_cast<Eigen::Index>(M - 1)) {
    throw InvalidInputError("build_theta: S must be (M-1)x(M-1)");
  }
  const auto dim = static_cast<Eigen::Index>(M - 1);
  Eigen::VectorXd inv_k2(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double k = static_cast<double>(j + 1);
    inv_k2(j) = 1.0 / (k * k);
  }
  // S*S = (M/2) * Id, so (2/M)*S*diag(1/K^2)*S inverts against
  // (2/M)*S*diag(K^2)*S.
  return (2.0 / static_cast<double>(M)) * S * inv_k2.asDiagonal() * S;
}

Eigen::MatrixXd build_A(const OdeGrid& grid) {
  const std::size_t M = grid.M;
  const std::size_t N = 2 * M;
  const double b = grid.b;
  const auto dim = static_cast<Eigen::Index>(M + 1);
  Eigen::MatrixXd A(dim, dim);

  // Row 0.
  {
    double sum_cot = 0.0;
    double sum_kcot = 0.0;
    for (std::size_t k = 1; k < M; ++k) {
      const double c = cot_at(static_cast<std::ptrdiff_t>(k), N);
      sum_cot += sign_pm(k) * c;
      sum_kcot += sign_pm(k) * static_cast<double>(k) * c;
      A(0, static_cast<Eigen::Index>(k)) = -(kPi / b) * sign_pm(k) * c;
    }
    A(0, 0) = (kPi / b) * sum_cot - (kPi / (b * static_cast<double>(M))) * sum_kcot - 1.0 / b;
    A(0, dim - 1) = (kPi / (b * static_cast<double>(M))) * sum_kcot + 1.0 / b;
  }

  // Rows 0 < i < M use the paired cotangent cot((k+i)pi/N) + cot((k-i)pi/N).
  for (std::size_t i = 1; i < M; ++i) {
    double t1 = 0.0;
    double t2 = 0.0;
    for (std::size_t k = 1; k < M; ++k) {
      const double pair = cot_at(static_cast<std::ptrdiff_t>(k + i), N) +
                          cot_at(static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(i), N);
      const double s = sign_pm(i + k);
      t1 += s * pair;
      t2 += s * static_cast<double>(k) * pair;
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          -(kPi / (2.0 * b)) * s * pair;
    }
    A(static_cast<Eigen::Index>(i), 0) =
        (kPi / (2.0 * b)) * t1 - (kPi / (2.0 * b * static_cast<double>(M))) * t2 - 1.0 / b;
    A(static_cast<Eigen::Index>(i), dim - 1) =
        (kPi / (2.0 * b * static_cast<double>(M))) * t2 + 1.0 / b;
  }

  // Row M.
  {
    double sum_tan = 0.0;
    double sum_kcot = 0.0;
    for (std::size_t k = 1; k < M; ++k) {
      const double a = kPi * static_cast<double>(k) / static_cast<double>(N);
      const double t = std::tan(a);
      sum_tan += sign_pm(k) * t;
      sum_kcot += static_cast<double>(k) * cot_at(static_cast<std::ptrdiff_t>(k), N);
      A(dim - 1, static_cast<Eigen::Index>(k)) = (kPi / b) * sign_pm(k) * t;
    }
    A(dim - 1, 0) = -(kPi / b) * sum_tan - (kPi / (b * static_cast<double>(M))) * sum_kcot - 1.0 / b;
    A(dim - 1, dim - 1) = (kPi / (b * static_cast<double>(M))) * sum_kcot + 1.0 / b;
  }

  return A;
}

SpectralOperators make_operators(const OdeGrid& grid) {
  SpectralOperators ops;
  ops.M = grid.M;
  auto [S, C] = build_S_C(grid.M);
  ops.S = std::move(S);
  ops.C = std::move(C);
  ops.Theta = build_theta(ops.S, grid.M);
  ops.A = build_A(grid);
  const auto dim = static_cast<Eigen::Index>(grid.M - 1);
  ops.K.resize(dim);
  ops.ones = Eigen::VectorXd::Ones(dim);
  ops.alternating.resize(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    ops.K(j) = static_cast<double>(j + 1);
    ops.alternating(j) = (j % 2 == 0) ? -1.0 : 1.0;
  }
  return ops;
}

SeriesCoeffs recover_coeffs(const Eigen::VectorXd& V, const OdeGrid& grid,
                            const Eigen::MatrixXd& S) {
  const auto M = static_cast<Eigen::Index>(grid.M);
  if (V.size() != M + 1) {
    throw InvalidInputError("recover_coeffs: V must have length M+1");
  }
  if (!V.allFinite()) {
    throw InvalidInputError("recover_coeffs: non-finite grid value");
  }
  const double b = grid.b;
  const double Md = static_cast<double>(grid.M);

  SeriesCoeffs out;
  out.a0 = (V(M) - V(0)) / b;
  out.a1 = V(0);

  Eigen::VectorXd w(M - 1);
  const double c1 = 2.0 * out.a1 * kPi * kPi / (Md * b * b);
  const double c0 = 2.0 * out.a0 * kPi * kPi / (b * Md * Md);
  const double cv = 2.0 * kPi * kPi / (Md * b * b);
  for (Eigen::Index j = 0; j < M - 1; ++j) {
    const double k = static_cast<double>(j + 1);
    w(j) = c1 + c0 * k - cv * V(j + 1);
  }
  Eigen::VectorXd sw = S * w;
  out.B.resize(M - 1);
  for (Eigen::Index j = 0; j < M - 1; ++j) {
    const double k = static_cast<double>(j + 1);
    out.B(j) = k * k * sw(j);
  }
  return out;
}

}  // namespace trigbvp
