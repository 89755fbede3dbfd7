#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "klein/random.hpp"

namespace klein::repvar {

using Matrix = Eigen::MatrixXcd;

// Unitarity tolerance after re-projection.
inline constexpr double kUnitarityTolerance = 1e-10;

// Unitary factor of the polar decomposition (the nearest unitary matrix in
// Frobenius norm), computed from an SVD.
Matrix polar_unitary(const Matrix& m);

// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
// of R's diagonal folded back into Q.
Matrix random_unitary(std::size_t n, Rng& rng);

// Frobenius norm of U*U - I.
double unitarity_defect(const Matrix& u);

// (X - X*) / 2.
Matrix skew_hermitian_part(const Matrix& x);

// A linear real structure v -> C conj(v) on C^n: C unitary with C conj(C) = I.
class RealStructure {
 public:
  // Throws DomainError unless C satisfies both conditions within 1e-9.
  explicit RealStructure(Matrix c);
  static RealStructure identity(std::size_t n);

  const Matrix& matrix() const noexcept { return c_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(c_.rows()); }

  // Ad_alpha(V) = C conj(V) C^{-1}; matrix of alpha V alpha^{-1}.
  Matrix twist(const Matrix& v) const;

  friend bool operator==(const RealStructure& a, const RealStructure& b) { return a.c_ == b.c_; }

 private:
  Matrix c_;
};

// An element (U, sign) of U(n) x| Z/2Z; sign -1 marks an anti-linear map
// v -> U C conj(v).
struct SemidirectElement {
  Matrix u;
  int sign = 1;
};

SemidirectElement semidirect_identity(std::size_t n);

// (U, e)(V, f) = (U Ad_alpha^[e](V), e f).
SemidirectElement multiply(const RealStructure& alpha, const SemidirectElement& lhs,
                           const SemidirectElement& rhs);

// (U, e)^{-1} = (Ad_alpha^[e](U^{-1}), e).
SemidirectElement inverse(const RealStructure& alpha, const SemidirectElement& x);

}  // namespace klein::repvar
