#ifndef TRIGBVP_ERRORS_HPP
#define TRIGBVP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigbvp {

// Malformed caller input: wrong length, non-finite sample, bad option value.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Padding index m outside 0 < m < M/2.
class InvalidPaddingError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// Evaluation request outside the interval a solution is defined on.
class OutOfDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A user-supplied function produced a non-finite or undefined value.
// `where` is the grid index or source position the failure was detected at.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::ptrdiff_t where)
      : std::runtime_error(what), where_(where) {}
  std::ptrdiff_t where() const noexcept { return where_; }

 private:
  std::ptrdiff_t where_;
};

// Rank classification could not separate the candidate ranks at the
// requested tolerance; carries both candidates.
class AmbiguousRankError : public std::runtime_error {
 public:
  AmbiguousRankError(const std::string& what, int rank_low, int rank_high)
      : std::runtime_error(what), rank_low_(rank_low), rank_high_(rank_high) {}
  int rank_low() const noexcept { return rank_low_; }
  int rank_high() const noexcept { return rank_high_; }

 private:
  int rank_low_;
  int rank_high_;
};

// Newton iteration ran out of iterations; carries the residual-norm trace.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, std::vector<double> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<double>& trace() const noexcept { return trace_; }

 private:
  std::vector<double> trace_;
};

// Newton Jacobian lost rank at the working tolerance.
class SingularJacobianError : public std::runtime_error {
 public:
  SingularJacobianError(const std::string& what, int rank)
      : std::runtime_error(what), rank_(rank) {}
  int rank() const noexcept { return rank_; }

 private:
  int rank_;
};

// Shooting root-finder did not meet the boundary conditions; carries the
// last iterate so callers can still report the failed trajectory.
class ShootingFailureError : public std::runtime_error {
 public:
  ShootingFailureError(const std::string& what, double ys, double us,
                       double boundary_residual)
      : std::runtime_error(what), ys_(ys), us_(us), residual_(boundary_residual) {}
  double ys() const noexcept { return ys_; }
  double us() const noexcept { return us_; }
  double boundary_residual() const noexcept { return residual_; }

 private:
  double ys_;
  double us_;
  double residual_;
};

// An integrated trajectory left the finite range; `last_step` is the last
// index with a finite state.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, std::size_t last_step)
      : std::runtime_error(what), last_step_(last_step) {}
  std::size_t last_step() const noexcept { return last_step_; }

 private:
  std::size_t last_step_;
};

}  // namespace trigbvp

#endif  // TRIGBVP_ERRORS_HPP
