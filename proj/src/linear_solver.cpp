#include "trigbvp/linear_solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "trigbvp/errors.hpp"

namespace trigbvp {

namespace {

constexpr double kPi = std::numbers::pi;

int rank_below(const Eigen::VectorXd& sigma, double relative_tol) {
  if (sigma.size() == 0) return 0;
  const double cut = relative_tol * sigma(0);
  if (!(sigma(0) > 0.0)) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cut) ++rank;
  }
  return rank;
}

}  // namespace

std::string solvability_name(Solvability s) {
  switch (s) {
    case Solvability::Unique: return "unique";
    case Solvability::Infinite: return "infinite";
    case Solvability::None: return "none";
  }
  return "unknown";
}

double SeriesSolution::eval_shifted(double t, int order) const {
  if (order < 0 || order > 2) {
    throw InvalidInputError("SeriesSolution: order must be 0, 1 or 2");
  }
  const double w = kPi / b;
  double acc = 0.0;
  switch (order) {
    case 0: {
      const double scale = (b / kPi) * (b / kPi);
      for (Eigen::Index j = 0; j < B.size(); ++j) {
        const double k = static_cast<double>(j + 1);
        acc -= scale * B(j) / (k * k) * std::sin(k * w * t);
      }
      return a1 + a0 * t + acc;
    }
    case 1: {
      const double scale = b / kPi;
      for (Eigen::Index j = 0; j < B.size(); ++j) {
        const double k = static_cast<double>(j + 1);
        acc -= scale * B(j) / k * std::cos(k * w * t);
      }
      return a0 + acc;
    }
    default: {
      for (Eigen::Index j = 0; j < B.size(); ++j) {
        const double k = static_cast<double>(j + 1);
        acc += B(j) * std::sin(k * w * t);
      }
      return acc;
    }
  }
}

double SeriesSolution::eval(double x, int order) const {
  const double slack = 1e-12 * (1.0 + std::abs(s) + std::abs(e));
  if (x < s - slack || x > e + slack) {
    throw OutOfDomainError("SeriesSolution: x outside [s, e]");
  }
  return eval_shifted(x - o, order);
}

SeriesSolution SolveReport::solution() const {
  SeriesSolution sol;
  sol.a0 = a0;
  sol.a1 = a1;
  sol.B = B;
  sol.b = grid.b;
  sol.o = grid.o;
  sol.s = grid.s;
  sol.e = grid.e;
  return sol;
}

AssembledSystem assemble_system(const LinearProblem& problem, const OdeGrid& grid,
                                const SpectralOperators& ops) {
  if (ops.M != grid.M) {
    throw InvalidInputError("assemble_system: grid and operators disagree on M");
  }
  const auto M = static_cast<Eigen::Index>(grid.M);
  const double Md = static_cast<double>(grid.M);
  const double b2 = grid.b * grid.b;
  const double pi2 = kPi * kPi;
  const CutoffSpec window = grid.cutoff();

  Eigen::VectorXd P(M - 1), Q(M - 1), R(M - 1);
  for (Eigen::Index k = 1; k < M; ++k) {
    const double x = grid.to_original(grid.points[static_cast<std::size_t>(k)]);
    const double h = cutoff_eval(window, x);
    const double pv = problem.p(x);
    const double qv = problem.q(x);
    const double rv = problem.r(x);
    if (!std::isfinite(pv) || !std::isfinite(qv) || !std::isfinite(rv)) {
      throw InvalidInputError("assemble_system: non-finite coefficient sample at grid index " +
                              std::to_string(k));
    }
    P(k - 1) = h * pv;
    Q(k - 1) = h * qv;
    R(k - 1) = h * rv;
  }

  const auto& D = problem.bc.D;
  const auto im = static_cast<Eigen::Index>(grid.m);
  const auto ie = static_cast<Eigen::Index>(grid.m + grid.n);

  AssembledSystem sys;
  sys.Phi.resize(M + 1, M + 1);
  sys.Psi.resize(M + 1);

  sys.Phi.row(0) = D(0, 1) * ops.A.row(im) + D(0, 3) * ops.A.row(ie);
  sys.Phi(0, im) += D(0, 0);
  sys.Phi(0, ie) += D(0, 2);
  sys.Phi.row(M) = D(1, 1) * ops.A.row(im) + D(1, 3) * ops.A.row(ie);
  sys.Phi(M, im) += D(1, 0);
  sys.Phi(M, ie) += D(1, 2);

  // Interior rows: the collocated ODE with first-derivative values taken
  // through A and the twice-antidifferentiated load through Theta.
  Eigen::MatrixXd inner = ops.Theta * P.asDiagonal() * ops.A.middleRows(1, M - 1);
  inner.middleCols(1, M - 1) += ops.Theta * Q.asDiagonal();
  for (Eigen::Index i = 1; i < M; ++i) {
    inner(i - 1, 0) += -(Md - static_cast<double>(i)) * pi2 / (Md * b2);
    inner(i - 1, M) += -static_cast<double>(i) * pi2 / (Md * b2);
    inner(i - 1, i) += pi2 / b2;
  }
  sys.Phi.middleRows(1, M - 1) = inner;

  sys.Psi(0) = problem.bc.alpha;
  sys.Psi(M) = problem.bc.beta;
  sys.Psi.segment(1, M - 1) = -(ops.Theta * R);
  return sys;
}

RankClassification classify_solvability(const Eigen::MatrixXd& Phi,
                                        const Eigen::VectorXd& Psi, double tolerance) {
  if (Phi.rows() != Phi.cols() || Phi.rows() != Psi.size()) {
    throw InvalidInputError("classify_solvability: Phi must be square and match Psi");
  }
  if (!(tolerance > 0.0) || !(tolerance < 1.0)) {
    throw InvalidInputError("classify_solvability: tolerance must lie in (0, 1)");
  }

  Eigen::BDCSVD<Eigen::MatrixXd> svd(Phi);
  const Eigen::VectorXd sigma = svd.singularValues();

  Eigen::MatrixXd aug(Phi.rows(), Phi.cols() + 1);
  aug << Phi, Psi;
  Eigen::BDCSVD<Eigen::MatrixXd> aug_svd(aug);

  RankClassification out;
  out.rank_phi = rank_below(sigma, tolerance);
  out.rank_aug = rank_below(aug_svd.singularValues(), tolerance);
  out.sigma_max = sigma.size() ? sigma(0) : 0.0;
  out.sigma_min = sigma.size() ? sigma(sigma.size() - 1) : 0.0;

  const int full = static_cast<int>(Phi.rows());
  if (out.rank_phi == full) {
    out.solvability = Solvability::Unique;
  } else if (out.rank_aug > out.rank_phi) {
    out.solvability = Solvability::None;
  } else {
    out.solvability = Solvability::Infinite;
  }
  return out;
}

namespace detail {

void finish_report(SolveReport& report, const SpectralOperators& ops,
                   const BoundaryConditions& bc,
                   const std::function<double(double, double, double)>& rhs) {
  const SeriesCoeffs coeffs = recover_coeffs(report.V, report.grid, ops.S);
  report.a0 = coeffs.a0;
  report.a1 = coeffs.a1;
  report.B = coeffs.B;

  const SeriesSolution sol = report.solution();
  const CutoffSpec window = report.grid.cutoff();

  // Dense probe of |v'' - h*f(x, v, v')| across the padded domain.
  const int probes = 1 << 10;
  double worst = 0.0;
  for (int i = 0; i < probes; ++i) {
    const double t = report.grid.b * static_cast<double>(i) / static_cast<double>(probes - 1);
    const double x = report.grid.to_original(t);
    const double h = cutoff_eval(window, x);
    const double v = sol.eval_shifted(t, 0);
    const double u = sol.eval_shifted(t, 1);
    const double z = sol.eval_shifted(t, 2);
    const double f = h == 0.0 ? 0.0 : h * rhs(x, v, u);
    worst = std::max(worst, std::abs(z - f));
  }
  report.residual_max = worst;

  const Eigen::Vector4d state(sol.eval(sol.s, 0), sol.eval(sol.s, 1),
                              sol.eval(sol.e, 0), sol.eval(sol.e, 1));
  const Eigen::Vector2d br = bc.residual(state);
  report.boundary_errors = {std::abs(br(0)), std::abs(br(1))};
}

}  // namespace detail

SolveReport solve_linear(const LinearProblem& problem, std::size_t M, std::size_t m,
                         const LinearOptions& options) {
  if (!(options.ambiguity_band >= 1.0)) {
    throw InvalidInputError("solve_linear: ambiguity band must be >= 1");
  }

  SolveReport report;
  report.grid = build_grid(problem.s, problem.e, M, m);
  const SpectralOperators ops = make_operators(report.grid);
  const AssembledSystem sys = assemble_system(problem, report.grid, ops);

  const RankClassification rc =
      classify_solvability(sys.Phi, sys.Psi, options.rank_tolerance);

  // Refuse to classify when nudging the cutoff by the ambiguity band flips
  // the rank of Phi.
  Eigen::BDCSVD<Eigen::MatrixXd> svd(sys.Phi, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd sigma = svd.singularValues();
  const int rank_wide = rank_below(sigma, options.rank_tolerance * options.ambiguity_band);
  const int rank_narrow = rank_below(sigma, options.rank_tolerance / options.ambiguity_band);
  if (rank_wide != rank_narrow) {
    throw AmbiguousRankError(
        "solve_linear: rank of Phi is ambiguous at the requested tolerance", rank_wide,
        rank_narrow);
  }

  report.solvability = rc.solvability;
  report.rank_phi = rc.rank_phi;
  report.rank_aug = rc.rank_aug;
  report.condition_estimate =
      rc.sigma_min > 0.0 ? rc.sigma_max / rc.sigma_min
                         : std::numeric_limits<double>::infinity();

  if (rc.solvability == Solvability::Unique) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sys.Phi);
    report.V = qr.solve(sys.Psi);
    report.V += qr.solve(sys.Psi - sys.Phi * report.V);  // one refinement pass
  } else {
    // Minimum-norm representative (infinite) or least-squares diagnostic
    // (none) through the truncated pseudo-inverse.
    const double cut = options.rank_tolerance * (sigma.size() ? sigma(0) : 0.0);
    Eigen::VectorXd coeff = svd.matrixU().transpose() * sys.Psi;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      coeff(i) = sigma(i) > cut ? coeff(i) / sigma(i) : 0.0;
    }
    report.V = svd.matrixV() * coeff;
  }

  auto rhs = [&problem](double x, double v, double u) {
    return problem.p(x) * u + problem.q(x) * v + problem.r(x);
  };
  detail::finish_report(report, ops, problem.bc, rhs);
  return report;
}

double evaluate_solution(const SolveReport& report, double x, int order) {
  return report.solution().eval(x, order);
}

}  // namespace trigbvp
