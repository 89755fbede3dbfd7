#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace klein {

// Base of every error raised by the library. The CLI maps each subclass to
// a fixed exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (invalid type, bad index, word not in
// a kernel, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search ran out of its node budget.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::uint64_t partial_count)
      : Error(what), partial_count_(partial_count) {}

  std::uint64_t partial_count() const noexcept { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

// A numerical solver hit its iteration cap. Carries the best iterate so the
// caller can inspect or restart from it.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what,
                   std::vector<Eigen::MatrixXcd> best_matrices,
                   double best_residual, int iterations)
      : Error(what),
        best_matrices_(std::move(best_matrices)),
        best_residual_(best_residual),
        iterations_(iterations) {}

  const std::vector<Eigen::MatrixXcd>& best_matrices() const noexcept {
    return best_matrices_;
  }
  double best_residual() const noexcept { return best_residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  std::vector<Eigen::MatrixXcd> best_matrices_;
  double best_residual_;
  int iterations_;
};

// A certificate that should hold by construction did not verify.
class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace klein
