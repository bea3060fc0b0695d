#ifndef TRIGBVP_OPERATORS_HPP
#define TRIGBVP_OPERATORS_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <utility>

#include "trigbvp/grid.hpp"

namespace trigbvp {

// Dense operator set for a grid with M cells (N = 2M sample points on the
// doubled period):
//   S, C   (M-1)x(M-1) matrices of sin/cos(2*pi*j*k/N), 1 <= j,k < M
//   Theta  (2/M) * S * diag(1/K^2) * S, the twice-antidifferentiation weight
//   A      (M+1)x(M+1) map from grid values of the series to grid values of
//          its first derivative (U = A*V); every row of A sums to zero
//   K      (1, 2, ..., M-1); ones and alternating (-1,1,...) companions
struct SpectralOperators {
  std::size_t M = 0;
  Eigen::MatrixXd S;
  Eigen::MatrixXd C;
  Eigen::MatrixXd Theta;
  Eigen::MatrixXd A;
  Eigen::VectorXd K;
  Eigen::VectorXd ones;
  Eigen::VectorXd alternating;
};

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> build_S_C(std::size_t M);

Eigen::MatrixXd build_theta(const Eigen::MatrixXd& S, std::size_t M);

Eigen::MatrixXd build_A(const OdeGrid& grid);

SpectralOperators make_operators(const OdeGrid& grid);

// Series parameters behind a grid-value vector: the solution is
// a1 + a0*t - (b/pi)^2 * sum_j (B_j / j^2) sin(j*pi*t/b).
struct SeriesCoeffs {
  double a0 = 0.0;
  double a1 = 0.0;
  Eigen::VectorXd B;
};

SeriesCoeffs recover_coeffs(const Eigen::VectorXd& V, const OdeGrid& grid,
                            const Eigen::MatrixXd& S);

}  // namespace trigbvp

#endif  // TRIGBVP_OPERATORS_HPP
