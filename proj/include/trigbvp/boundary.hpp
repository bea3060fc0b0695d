#ifndef TRIGBVP_BOUNDARY_HPP
#define TRIGBVP_BOUNDARY_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>

namespace trigbvp {

// The four built-in condition shapes; rows of D per type:
//   Neumann   (1,0,0,0), (0,1,0,0)   pins y(s), y'(s)
//   Dirichlet (1,0,0,0), (0,0,1,0)   pins y(s), y(e)
//   Mix1      (1,0,0,0), (0,0,0,1)   pins y(s), y'(e)
//   Mix2      (1,1,0,0), (0,0,1,1)   pins y(s)+y'(s), y(e)+y'(e)
enum class BoundaryType { Neumann, Dirichlet, Mix1, Mix2 };

std::string boundary_type_name(BoundaryType type);
std::optional<BoundaryType> boundary_type_from_name(std::string_view name);

// Two linear conditions D * (y(s), y'(s), y(e), y'(e))^T = (alpha, beta);
// D must have rank 2.
struct BoundaryConditions {
  Eigen::Matrix<double, 2, 4> D;
  double alpha = 0.0;
  double beta = 0.0;

  // Homogeneous Neumann placeholder.
  BoundaryConditions();
  BoundaryConditions(const Eigen::Matrix<double, 2, 4>& D_, double alpha_, double beta_);

  // Residuals of both rows against a boundary state (ys, us, ye, ue).
  Eigen::Vector2d residual(const Eigen::Vector4d& state) const {
    return D * state - Eigen::Vector2d(alpha, beta);
  }
};

BoundaryConditions make_boundary(BoundaryType type, double alpha, double beta);

}  // namespace trigbvp

#endif  // TRIGBVP_BOUNDARY_HPP
