#include "trigbvp/boundary.hpp"

#include <cmath>

#include "trigbvp/errors.hpp"

namespace trigbvp {

std::string boundary_type_name(BoundaryType type) {
  switch (type) {
    case BoundaryType::Neumann: return "neumann";
    case BoundaryType::Dirichlet: return "dirichlet";
    case BoundaryType::Mix1: return "mix1";
    case BoundaryType::Mix2: return "mix2";
  }
  return "unknown";
}

std::optional<BoundaryType> boundary_type_from_name(std::string_view name) {
  if (name == "neumann") return BoundaryType::Neumann;
  if (name == "dirichlet") return BoundaryType::Dirichlet;
  if (name == "mix1" || name == "mix_1") return BoundaryType::Mix1;
  if (name == "mix2" || name == "mix_2") return BoundaryType::Mix2;
  return std::nullopt;
}

BoundaryConditions::BoundaryConditions() : D(Eigen::Matrix<double, 2, 4>::Zero()) {
  D(0, 0) = 1.0;
  D(1, 1) = 1.0;
}

BoundaryConditions::BoundaryConditions(const Eigen::Matrix<double, 2, 4>& D_,
                                       double alpha_, double beta_)
    : D(D_), alpha(alpha_), beta(beta_) {
  if (!D.allFinite() || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw InvalidInputError("BoundaryConditions: non-finite entry");
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 2, 4>> svd(D);
  const auto& sv = svd.singularValues();
  if (!(sv(1) > 1e-12 * sv(0))) {
    throw InvalidInputError("BoundaryConditions: D must have rank 2");
  }
}

BoundaryConditions make_boundary(BoundaryType type, double alpha, double beta) {
  Eigen::Matrix<double, 2, 4> D = Eigen::Matrix<double, 2, 4>::Zero();
  switch (type) {
    case BoundaryType::Neumann:
      D(0, 0) = 1.0;
      D(1, 1) = 1.0;
      break;
    case BoundaryType::Dirichlet:
      D(0, 0) = 1.0;
      D(1, 2) = 1.0;
      break;
    case BoundaryType::Mix1:
      D(0, 0) = 1.0;
      D(1, 3) = 1.0;
      break;
    case BoundaryType::Mix2:
      D(0, 0) = 1.0;
      D(0, 1) = 1.0;
      D(1, 2) = 1.0;
      D(1, 3) = 1.0;
      break;
  }
  return BoundaryConditions(D, alpha, beta);
}

}  // namespace trigbvp
