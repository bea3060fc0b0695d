#include "trigbvp/newton_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "trigbvp/errors.hpp"
#include "trigbvp/rk4.hpp"
#include "trigbvp/rng.hpp"

namespace trigbvp {

namespace {

constexpr double kPi = std::numbers::pi;

// Window-weighted right-hand side in computational coordinates.
double windowed_rhs(const NonlinearProblem& problem, const CutoffSpec& window,
                    const OdeGrid& grid, double t, double v, double u) {
  const double x = grid.to_original(t);
  const double h = cutoff_eval(window, x);
  return h == 0.0 ? 0.0 : h * problem.rhs.f(x, v, u);
}

// Straight line through the least-squares boundary state implied by D.
Eigen::VectorXd line_guess(const NonlinearProblem& problem, const OdeGrid& grid) {
  Eigen::Vector2d target(problem.bc.alpha, problem.bc.beta);
  Eigen::Vector4d state =
      problem.bc.D.completeOrthogonalDecomposition().solve(target);

  Eigen::Matrix<double, 4, 2> design;
  design << 1.0, problem.s, 0.0, 1.0, 1.0, problem.e, 0.0, 1.0;
  Eigen::Vector2d line = design.colPivHouseholderQr().solve(state);

  Eigen::VectorXd V(grid.M + 1);
  for (std::size_t k = 0; k <= grid.M; ++k) {
    V(static_cast<Eigen::Index>(k)) = line(0) + line(1) * grid.to_original(grid.points[k]);
  }
  return V;
}

// RK4 both ways from x_m across the windowed system, sampled at grid nodes.
Eigen::VectorXd rk4_guess(const NonlinearProblem& problem, const OdeGrid& grid,
                          double vs, double us) {
  const CutoffSpec window = grid.cutoff();
  auto g = [&](double t, double v, double u) {
    return windowed_rhs(problem, window, grid, t, v, u);
  };

  constexpr std::size_t kSubsteps = 4;
  Eigen::VectorXd V(grid.M + 1);
  const double tm = grid.points[grid.m];

  const Trajectory fwd = rk4_ivp(g, tm, grid.b, vs, us, kSubsteps * (grid.M - grid.m));
  for (std::size_t k = grid.m; k <= grid.M; ++k) {
    V(static_cast<Eigen::Index>(k)) = fwd.y[kSubsteps * (k - grid.m)];
  }
  const Trajectory bwd = rk4_ivp(g, tm, 0.0, vs, us, kSubsteps * grid.m);
  for (std::size_t k = 0; k < grid.m; ++k) {
    V(static_cast<Eigen::Index>(k)) = bwd.y[kSubsteps * (grid.m - k)];
  }
  return V;
}

Eigen::VectorXd automatic_guess(const NonlinearProblem& problem, const OdeGrid& grid) {
  const auto& D = problem.bc.D;
  const double scale = D.cwiseAbs().maxCoeff();
  const bool ivp_shaped = std::abs(D(0, 2)) <= 1e-14 * scale &&
                          std::abs(D(0, 3)) <= 1e-14 * scale &&
                          std::abs(D(1, 2)) <= 1e-14 * scale &&
                          std::abs(D(1, 3)) <= 1e-14 * scale;
  if (ivp_shaped) {
    Eigen::Matrix2d head = D.leftCols<2>();
    if (std::abs(head.determinant()) > 1e-12 * scale * scale) {
      const Eigen::Vector2d init =
          head.colPivHouseholderQr().solve(Eigen::Vector2d(problem.bc.alpha, problem.bc.beta));
      try {
        return rk4_guess(problem, grid, init(0), init(1));
      } catch (const BlowUpError&) {
        // fall through to the line
      }
    }
  }
  return line_guess(problem, grid);
}

}  // namespace

NonlinearRHS lift_linear(const LinearProblem& problem) {
  NonlinearRHS rhs;
  rhs.f = [p = problem.p, q = problem.q, r = problem.r](double x, double v, double u) {
    return p(x) * u + q(x) * v + r(x);
  };
  rhs.df_dv = [q = problem.q](double x, double, double) { return q(x); };
  rhs.df_du = [p = problem.p](double x, double, double) { return p(x); };
  return rhs;
}

double partial_consistency(const NonlinearRHS& rhs, double x_lo, double x_hi,
                           double v_scale, double u_scale, int samples) {
  SplitMix64 rng(0x5eedu);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = rng.uniform(x_lo, x_hi);
    const double v = rng.uniform(-v_scale, v_scale);
    const double u = rng.uniform(-u_scale, u_scale);
    const double hv = 1e-6 * (1.0 + std::abs(v));
    const double hu = 1e-6 * (1.0 + std::abs(u));
    const double fd_v = (rhs.f(x, v + hv, u) - rhs.f(x, v - hv, u)) / (2.0 * hv);
    const double fd_u = (rhs.f(x, v, u + hu) - rhs.f(x, v, u - hu)) / (2.0 * hu);
    const double dv = rhs.df_dv(x, v, u);
    const double du = rhs.df_du(x, v, u);
    worst = std::max(worst, std::abs(dv - fd_v) / (1.0 + std::abs(fd_v)));
    worst = std::max(worst, std::abs(du - fd_u) / (1.0 + std::abs(fd_u)));
  }
  return worst;
}

Eigen::VectorXd nonlinear_residual(const Eigen::VectorXd& V, const NonlinearProblem& problem,
                                   const OdeGrid& grid, const SpectralOperators& ops) {
  const auto M = static_cast<Eigen::Index>(grid.M);
  if (V.size() != M + 1) {
    throw InvalidInputError("nonlinear_residual: V must have length M+1");
  }
  const double Md = static_cast<double>(grid.M);
  const double b2 = grid.b * grid.b;
  const double pi2 = kPi * kPi;
  const CutoffSpec window = grid.cutoff();

  const Eigen::VectorXd U = ops.A * V;
  const auto im = static_cast<Eigen::Index>(grid.m);
  const auto ie = static_cast<Eigen::Index>(grid.m + grid.n);

  Eigen::VectorXd F(M - 1);
  for (Eigen::Index l = 1; l < M; ++l) {
    const double x = grid.to_original(grid.points[static_cast<std::size_t>(l)]);
    const double h = cutoff_eval(window, x);
    const double fx = problem.rhs.f(x, V(l), U(l));
    if (!std::isfinite(fx)) {
      throw EvaluationError(
          "nonlinear_residual: f evaluated to a non-finite value at grid index " +
              std::to_string(l),
          static_cast<std::ptrdiff_t>(l));
    }
    F(l - 1) = h * fx;
  }

  Eigen::VectorXd H(M + 1);
  const Eigen::Vector4d state(V(im), U(im), V(ie), U(ie));
  const Eigen::Vector2d br = problem.bc.residual(state);
  H(0) = br(0);
  H(M) = br(1);

  H.segment(1, M - 1) = ops.Theta * F;
  for (Eigen::Index i = 1; i < M; ++i) {
    H(i) += pi2 / b2 * V(i) -
            pi2 / (Md * b2) * ((Md - static_cast<double>(i)) * V(0) + static_cast<double>(i) * V(M));
  }
  return H;
}

Eigen::MatrixXd nonlinear_jacobian(const Eigen::VectorXd& V, const NonlinearProblem& problem,
                                   const OdeGrid& grid, const SpectralOperators& ops) {
  const auto M = static_cast<Eigen::Index>(grid.M);
  if (V.size() != M + 1) {
    throw InvalidInputError("nonlinear_jacobian: V must have length M+1");
  }
  const double Md = static_cast<double>(grid.M);
  const double b2 = grid.b * grid.b;
  const double pi2 = kPi * kPi;
  const CutoffSpec window = grid.cutoff();

  const Eigen::VectorXd U = ops.A * V;
  Eigen::VectorXd fv(M - 1), fu(M - 1);
  for (Eigen::Index l = 1; l < M; ++l) {
    const double x = grid.to_original(grid.points[static_cast<std::size_t>(l)]);
    const double h = cutoff_eval(window, x);
    const double dv = problem.rhs.df_dv(x, V(l), U(l));
    const double du = problem.rhs.df_du(x, V(l), U(l));
    if (!std::isfinite(dv) || !std::isfinite(du)) {
      throw EvaluationError(
          "nonlinear_jacobian: partial evaluated to a non-finite value at grid index " +
              std::to_string(l),
          static_cast<std::ptrdiff_t>(l));
    }
    fv(l - 1) = h * dv;
    fu(l - 1) = h * du;
  }

  const auto& D = problem.bc.D;
  const auto im = static_cast<Eigen::Index>(grid.m);
  const auto ie = static_cast<Eigen::Index>(grid.m + grid.n);

  Eigen::MatrixXd J(M + 1, M + 1);
  J.row(0) = D(0, 1) * ops.A.row(im) + D(0, 3) * ops.A.row(ie);
  J(0, im) += D(0, 0);
  J(0, ie) += D(0, 2);
  J.row(M) = D(1, 1) * ops.A.row(im) + D(1, 3) * ops.A.row(ie);
  J(M, im) += D(1, 0);
  J(M, ie) += D(1, 2);

  Eigen::MatrixXd inner = ops.Theta * fu.asDiagonal() * ops.A.middleRows(1, M - 1);
  inner.middleCols(1, M - 1) += ops.Theta * fv.asDiagonal();
  for (Eigen::Index i = 1; i < M; ++i) {
    inner(i - 1, 0) += -(Md - static_cast<double>(i)) * pi2 / (Md * b2);
    inner(i - 1, M) += -static_cast<double>(i) * pi2 / (Md * b2);
    inner(i - 1, i) += pi2 / b2;
  }
  J.middleRows(1, M - 1) = inner;
  return J;
}

SolveReport solve_nonlinear(const NonlinearProblem& problem, std::size_t M, std::size_t m,
                            const InitialGuess& guess, const NewtonOptions& options) {
  if (options.max_iterations < 1) {
    throw InvalidInputError("solve_nonlinear: max_iterations must be >= 1");
  }
  if (!(options.residual_tolerance > 0.0) || !(options.step_tolerance > 0.0) ||
      !(options.min_step > 0.0)) {
    throw InvalidInputError("solve_nonlinear: tolerances must be positive");
  }

  SolveReport report;
  report.grid = build_grid(problem.s, problem.e, M, m);
  const SpectralOperators ops = make_operators(report.grid);

  Eigen::VectorXd V;
  if (guess.kind == InitialGuess::Kind::Vector) {
    if (guess.V.size() != static_cast<Eigen::Index>(M + 1)) {
      throw InvalidInputError("solve_nonlinear: initial guess must have length M+1");
    }
    V = guess.V;
  } else {
    V = automatic_guess(problem, report.grid);
  }

  if (options.validate_partials) {
    const double v_scale = 1.0 + 2.0 * V.cwiseAbs().maxCoeff();
    const double u_scale = 1.0 + 2.0 * (ops.A * V).cwiseAbs().maxCoeff();
    const double dev = partial_consistency(problem.rhs, problem.s - report.grid.delta,
                                           problem.e + report.grid.delta, v_scale, u_scale);
    if (dev > 1e-5) {
      throw InvalidInputError(
          "solve_nonlinear: partial derivatives disagree with finite differences of f "
          "(max relative deviation " +
          std::to_string(dev) + ")");
    }
  }

  const double rtol =
      options.residual_tolerance * (1.0 + std::abs(problem.bc.alpha) + std::abs(problem.bc.beta));

  Eigen::VectorXd H = nonlinear_residual(V, problem, report.grid, ops);
  std::vector<double> trace{H.cwiseAbs().maxCoeff()};
  double condition = 0.0;

  for (int iter = 0; iter < options.max_iterations && trace.back() > rtol; ++iter) {
    Eigen::MatrixXd J = nonlinear_jacobian(V, problem, report.grid, ops);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(J);
    qr.setThreshold(1e-13);
    if (qr.rank() < static_cast<Eigen::Index>(M + 1)) {
      throw SingularJacobianError(
          "solve_nonlinear: Jacobian is rank deficient at the working tolerance",
          static_cast<int>(qr.rank()));
    }
    const auto& R = qr.matrixR();
    condition = std::abs(R(0, 0)) /
                std::max(std::abs(R(static_cast<Eigen::Index>(M), static_cast<Eigen::Index>(M))),
                         1e-300);

    const Eigen::VectorXd dV = qr.solve(-H);
    double step = 1.0;
    bool accepted = false;
    Eigen::VectorXd Vn;
    Eigen::VectorXd Hn;
    double norm_n = 0.0;
    while (true) {
      Vn = V + step * dV;
      Hn = nonlinear_residual(Vn, problem, report.grid, ops);
      norm_n = Hn.cwiseAbs().maxCoeff();
      if (norm_n < trace.back() || (step <= options.min_step && norm_n <= trace.back())) {
        accepted = true;
        break;
      }
      if (step <= options.min_step) break;
      step *= 0.5;
    }
    if (!accepted) {
      trace.push_back(norm_n);
      throw NonConvergenceError(
          "solve_nonlinear: backtracking found no descent direction after " +
              std::to_string(iter + 1) + " iterations (residual " +
              std::to_string(trace.back()) + ")",
          trace);
    }
    V = Vn;
    H = Hn;
    trace.push_back(norm_n);
    if (step * dV.cwiseAbs().maxCoeff() <= options.step_tolerance * (1.0 + V.cwiseAbs().maxCoeff())) {
      break;
    }
  }

  if (trace.back() > rtol) {
    throw NonConvergenceError("solve_nonlinear: no convergence within " +
                                  std::to_string(options.max_iterations) + " iterations",
                              trace);
  }

  report.V = V;
  report.solvability = Solvability::Unique;
  report.rank_phi = static_cast<int>(M + 1);
  report.rank_aug = static_cast<int>(M + 1);
  report.condition_estimate = condition;
  report.newton_trace = trace;
  detail::finish_report(report, ops, problem.bc, problem.rhs.f);
  return report;
}

}  // namespace trigbvp
