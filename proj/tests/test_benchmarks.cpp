#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trigbvp/errors.hpp"
#include "trigbvp/rng.hpp"
#include "trigbvp/shooting.hpp"
#include "trigbvp/test_problems.hpp"

using namespace trigbvp;

namespace {

constexpr double kPi = std::numbers::pi;

std::function<double(double, double, double)> rhs_of(const TestProblem& p) {
  return [&p](double x, double y, double u) { return p.p(x) * u + p.q(x) * y + p.r(x); };
}

}  // namespace

TEST_CASE("rk4 integrates linear dynamics exactly") {
  const Trajectory traj =
      rk4_ivp([](double, double, double) { return 0.0; }, 0.0, 1.0, 1.0, 2.0, 37);
  CHECK(traj.y.back() == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(traj.u.back() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("rk4 on the harmonic oscillator") {
  const Trajectory traj =
      rk4_ivp([](double, double y, double) { return -y; }, 0.0, 1.0, 0.0, 1.0, 128);
  CHECK(std::abs(traj.y.back() - std::sin(1.0)) <= 1e-9);
}

TEST_CASE("rk4 blow-up raises with the last valid step") {
  try {
    rk4_ivp([](double, double y, double) { return y * y * y; }, 0.0, 3.0, 5.0, 5.0, 64);
    FAIL("expected BlowUpError");
  } catch (const BlowUpError& err) {
    CHECK(err.last_step() < 64);
  }
  CHECK_THROWS_AS(
      rk4_ivp([](double, double, double) { return 0.0; }, 0.0, 1.0, 1.0, 0.0, 0),
      InvalidInputError);
}

TEST_CASE("rk4 benchmark error on the homogeneous problem") {
  const TestProblem problem = make_homogeneous_problem(BoundaryType::Neumann);
  const Trajectory traj = rk4_ivp(rhs_of(problem), problem.s, problem.e,
                                  problem.exact(problem.s), problem.exact_prime(problem.s),
                                  1u << 7);
  const double err = trajectory_error(traj, problem);
  // Reported value 1.7e-6, reproduced within two orders of magnitude.
  CHECK(err >= 1.7e-8);
  CHECK(err <= 1.7e-4);
}

TEST_CASE("rk4 empirical order is four") {
  const TestProblem problem = make_homogeneous_problem(BoundaryType::Neumann);
  double last = 0.0;
  for (int q = 6; q <= 9; ++q) {
    const Trajectory traj = rk4_ivp(rhs_of(problem), problem.s, problem.e,
                                    problem.exact(problem.s),
                                    problem.exact_prime(problem.s), 1u << q);
    const double err = trajectory_error(traj, problem);
    if (q > 6) {
      const double order = std::log2(last / err);
      CHECK(order >= 3.5);
      CHECK(order <= 4.5);
    }
    last = err;
  }
}

TEST_CASE("homogeneous problem factory") {
  const TestProblem neumann = make_homogeneous_problem(BoundaryType::Neumann);
  CHECK(neumann.bc.alpha == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(neumann.bc.beta == doctest::Approx(kPi / 2.0).epsilon(1e-14));
  CHECK(neumann.expected == Solvability::Unique);

  const TestProblem dirichlet = make_homogeneous_problem(BoundaryType::Dirichlet);
  CHECK(dirichlet.bc.beta == doctest::Approx(-std::exp(-2.0 * kPi)).epsilon(1e-12));
  CHECK(dirichlet.expected == Solvability::Infinite);
  CHECK(make_homogeneous_problem(BoundaryType::Dirichlet, 1.1).expected == Solvability::None);

  CHECK(make_homogeneous_problem(BoundaryType::Mix1).expected == Solvability::Unique);
  CHECK(make_homogeneous_problem(BoundaryType::Mix2).expected == Solvability::Infinite);
  CHECK(make_homogeneous_problem(BoundaryType::Mix2, 1.1).expected == Solvability::None);
}

TEST_CASE("nonhomogeneous problem factory") {
  const TestProblem problem = make_nonhomogeneous_problem(kPi / 2.0, BoundaryType::Dirichlet);
  CHECK(problem.expected == Solvability::Unique);

  // The constructed load keeps the base an exact solution; cross-check the
  // derivative closed forms against finite differences of the base.
  const double h = 1e-6;
  for (int i = 0; i <= 20; ++i) {
    const double x = 1.0 + 2.0 * static_cast<double>(i) / 20.0;
    const double fd2 =
        (problem.exact(x + h) - 2.0 * problem.exact(x) + problem.exact(x - h)) / (h * h);
    const double ode = problem.p(x) * problem.exact_prime(x) +
                       problem.q(x) * problem.exact(x) + problem.r(x);
    CHECK(std::abs(fd2 - ode) <= 1e-3 * (1.0 + std::abs(fd2)));
  }

  CHECK_THROWS_AS(make_nonhomogeneous_problem(0.5, BoundaryType::Neumann), InvalidInputError);
  CHECK_THROWS_AS(make_nonhomogeneous_problem(10.0, BoundaryType::Neumann), InvalidInputError);
}

TEST_CASE("shooting on neumann returns the pinned data unchanged") {
  const TestProblem problem = make_homogeneous_problem(BoundaryType::Neumann);
  const ShootResult result =
      shoot(rhs_of(problem), problem.s, problem.e, problem.bc, problem.btype, {4.0, -4.0});
  CHECK(result.ys == doctest::Approx(problem.bc.alpha).epsilon(1e-14));
  CHECK(result.us == doctest::Approx(problem.bc.beta).epsilon(1e-14));
  CHECK(result.iterations == 0);
}

TEST_CASE("consistent dirichlet accepts any initial slope") {
  // Infinitely many solutions: the end value does not depend on y'(s), so
  // successive random guesses converge to different slopes.
  const TestProblem problem = make_homogeneous_problem(BoundaryType::Dirichlet);
  SplitMix64 rng(31);
  double last = std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < 3; ++i) {
    const double guess = rng.uniform(-5.0, 5.0);
    const ShootResult result =
        shoot(rhs_of(problem), problem.s, problem.e, problem.bc, problem.btype, {0.0, guess});
    CHECK(result.boundary_residual <= 1e-7 * (1.0 + std::abs(problem.bc.alpha) +
                                              std::abs(problem.bc.beta)));
    if (i > 0) CHECK(result.us != last);
    last = result.us;
  }
}

TEST_CASE("mix1 shooting hits the derivative condition") {
  const TestProblem problem = make_nonhomogeneous_problem(kPi / 2.0, BoundaryType::Mix1);
  const ShootResult result =
      shoot(rhs_of(problem), problem.s, problem.e, problem.bc, problem.btype, {0.0, 2.5});
  CHECK(trajectory_error(result.trajectory, problem) <= 1e-5);
}

TEST_CASE("mix2 shooting fails on the nonhomogeneous family") {
  for (double theta : {kPi / 2.0, 3.0 * kPi / 2.0}) {
    const TestProblem problem = make_nonhomogeneous_problem(theta, BoundaryType::Mix2);
    SplitMix64 rng(7);
    try {
      const ShootResult result =
          shoot(rhs_of(problem), problem.s, problem.e, problem.bc, problem.btype,
                {rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)});
      // If the sweep ever converges it must have genuinely met the conditions.
      CHECK(result.boundary_residual <= 1e-6 * 10.0);
    } catch (const ShootingFailureError& err) {
      const Trajectory traj =
          rk4_ivp(rhs_of(problem), problem.s, problem.e, err.ys(), err.us(), 128);
      CHECK(trajectory_error(traj, problem) >= 1e-2);
    }
  }
}

TEST_CASE("mix2 shooting on the inconsistent homogeneous problem fails") {
  const TestProblem problem = make_homogeneous_problem(BoundaryType::Mix2, 1.1);
  CHECK_THROWS_AS(shoot(rhs_of(problem), problem.s, problem.e, problem.bc, problem.btype,
                        {1.0, -1.0}),
                  ShootingFailureError);
}

TEST_CASE("convergence study through q = 9") {
  SUBCASE("neumann with both solvers") {
    const TestProblem problem = make_homogeneous_problem(BoundaryType::Neumann);
    const StudyTable table =
        convergence_study(problem, 6, 9, {StudySolver::Spectral, StudySolver::Rk4}, 7);
    REQUIRE(table.rows.size() == 4);
    CHECK(table.strictly_decreasing(0));

    const double reported[4] = {1.8e-6, 1.5e-9, 1.6e-12, 1.3e-12};
    for (std::size_t i = 0; i < 4; ++i) {
      REQUIRE(table.rows[i].cells[0].ok);
      const double err = table.rows[i].cells[0].error;
      CHECK(err <= 100.0 * reported[i]);
      CHECK(err >= reported[i] / 100.0);
    }

    // The spectral column dominates the fixed-order column on the shared rows.
    for (std::size_t i = 0; i < 3; ++i) {
      REQUIRE(table.rows[i].cells[1].ok);
      CHECK(table.rows[i].cells[0].error < table.rows[i].cells[1].error);
    }

    // Fourth-order decay of the rk4 column.
    for (std::size_t i = 1; i < 4; ++i) {
      const double order =
          std::log2(table.rows[i - 1].cells[1].error / table.rows[i].cells[1].error);
      CHECK(order >= 3.5);
      CHECK(order <= 4.5);
    }
  }

  SUBCASE("mix1 spectral column") {
    const TestProblem problem = make_homogeneous_problem(BoundaryType::Mix1);
    const StudyTable table = convergence_study(problem, 6, 9, {StudySolver::Spectral}, 7);
    CHECK(table.strictly_decreasing(0));
    const double reported[4] = {7.7e-5, 4.1e-8, 1.2e-10, 8.0e-11};
    for (std::size_t i = 0; i < 4; ++i) {
      REQUIRE(table.rows[i].cells[0].ok);
      CHECK(table.rows[i].cells[0].error <= 100.0 * reported[i]);
      CHECK(table.rows[i].cells[0].error >= reported[i] / 100.0);
    }
  }

  SUBCASE("failures are recorded in-row") {
    const TestProblem problem = make_homogeneous_problem(BoundaryType::Dirichlet);
    const StudyTable table = convergence_study(problem, 6, 7, {StudySolver::Spectral}, 7);
    for (const StudyRow& row : table.rows) {
      CHECK(!row.cells[0].ok);
      CHECK(!row.cells[0].note.empty());
    }
    CHECK(!table.strictly_decreasing(0));
  }
}
