#include "klein/unitary.hpp"

#include <cmath>

#include "klein/errors.hpp"

namespace klein::repvar {

Matrix polar_unitary(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Matrix random_unitary(std::size_t n, Rng& rng) {
  const auto dim = static_cast<Eigen::Index>(n);
  Matrix z(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) z(i, j) = rng.complex_gaussian();
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double mod = std::abs(r(j, j));
    if (mod > 0) q.col(j) *= r(j, j) / mod;
  }
  return polar_unitary(q);
}

double unitarity_defect(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm();
}

Matrix skew_hermitian_part(const Matrix& x) { return (x - x.adjoint()) / 2.0; }

RealStructure::RealStructure(Matrix c) : c_(std::move(c)) {
  if (c_.rows() == 0 || c_.rows() != c_.cols()) {
    throw DomainError("real structure must be a non-empty square matrix");
  }
  if (unitarity_defect(c_) > 1e-9) throw DomainError("real structure matrix is not unitary");
  const Matrix id = Matrix::Identity(c_.rows(), c_.cols());
  if ((c_ * c_.conjugate() - id).norm() > 1e-9) {
    throw DomainError("real structure is not an involution: C conj(C) != I");
  }
}

RealStructure RealStructure::identity(std::size_t n) {
  if (n == 0) throw DomainError("dimension must be positive");
  const auto dim = static_cast<Eigen::Index>(n);
  return RealStructure(Matrix::Identity(dim, dim));
}

Matrix RealStructure::twist(const Matrix& v) const { return c_ * v.conjugate() * c_.adjoint(); }

SemidirectElement semidirect_identity(std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(n);
  return SemidirectElement{Matrix::Identity(dim, dim), 1};
}

SemidirectElement multiply(const RealStructure& alpha, const SemidirectElement& lhs,
                           const SemidirectElement& rhs) {
  if (lhs.u.rows() != rhs.u.rows()) throw DomainError("dimension mismatch in semidirect product");
  const Matrix twisted = lhs.sign > 0 ? rhs.u : alpha.twist(rhs.u);
  return SemidirectElement{lhs.u * twisted, lhs.sign * rhs.sign};
}

SemidirectElement inverse(const RealStructure& alpha, const SemidirectElement& x) {
  const Matrix inv = x.u.adjoint();
  return SemidirectElement{x.sign > 0 ? inv : alpha.twist(inv), x.sign};
}

}  // namespace klein::repvar
