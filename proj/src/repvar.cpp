#include "klein/repvar.hpp"

#include <limits>
#include <string>

#include "klein/errors.hpp"

namespace klein::repvar {

namespace {

constexpr double kAcceptUnitary = 1e-6;

void check_matrices(std::size_t count, std::vector<Matrix>& matrices, std::size_t& dim) {
  if (matrices.size() != count) {
    throw DomainError("expected " + std::to_string(count) + " matrices, got " +
                      std::to_string(matrices.size()));
  }
  dim = static_cast<std::size_t>(matrices.front().rows());
  require_positive_dim(dim);
  for (Matrix& m : matrices) {
    if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(m.cols()) != dim) {
      throw DomainError("all matrices must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    const double defect = unitarity_defect(m);
    if (defect > kAcceptUnitary) throw DomainError("matrix is not unitary");
    if (defect > kUnitarityTolerance) m = polar_unitary(m);
  }
}

}  // namespace

void require_positive_dim(std::size_t dim) {
  if (dim == 0) throw DomainError("dimension must be positive");
}

std::vector<Matrix> identity_matrices(std::size_t count, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return std::vector<Matrix>(count, Matrix::Identity(n, n));
}

std::vector<int> augmentation_signs(const fp::AugmentedPresentation& ap) {
  std::vector<int> signs;
  for (std::uint8_t a : ap.augmentation()) signs.push_back(a ? -1 : 1);
  return signs;
}

UnitaryRep make_unitary_rep(fp::Presentation p, std::vector<Matrix> matrices) {
  std::size_t dim = 0;
  check_matrices(p.generator_count(), matrices, dim);
  UnitaryRep rep{std::move(p), dim, std::move(matrices), 0.0, 0};
  rep.residual = relator_residual(rep);
  return rep;
}

AugmentedUnitaryRep make_augmented_rep(fp::AugmentedPresentation ap, RealStructure alpha,
                                       std::vector<Matrix> matrices, std::vector<int> signs) {
  std::size_t dim = 0;
  check_matrices(ap.generator_count(), matrices, dim);
  if (alpha.dim() != dim) throw DomainError("real structure dimension does not match the matrices");
  if (signs != augmentation_signs(ap)) {
    throw DomainError("signs must equal (-1)^augmentation for every generator");
  }
  AugmentedUnitaryRep rep{std::move(ap), std::move(alpha), dim, std::move(matrices),
                          std::move(signs), 0.0, 0};
  rep.residual = relator_residual(rep);
  return rep;
}

Matrix evaluate_word_matrix(const UnitaryRep& rep, const fp::Word& w) {
  rep.presentation.check_word(w);
  const auto n = static_cast<Eigen::Index>(rep.dim);
  Matrix out = Matrix::Identity(n, n);
  for (const fp::Letter& l : w) {
    const Matrix& m = rep.matrices[l.gen];
    if (m.rows() != n) throw DomainError("dimension mismatch");
    out = l.inverse ? Matrix(out * m.adjoint()) : Matrix(out * m);
  }
  return out;
}

SemidirectElement evaluate_word_pair(const AugmentedUnitaryRep& rep, const fp::Word& w) {
  rep.presentation.base().check_word(w);
  SemidirectElement out = semidirect_identity(rep.dim);
  for (const fp::Letter& l : w) {
    SemidirectElement g{rep.matrices[l.gen], rep.signs[l.gen]};
    if (g.u.rows() != out.u.rows()) throw DomainError("dimension mismatch");
    out = multiply(rep.real_structure, out, l.inverse ? inverse(rep.real_structure, g) : g);
  }
  return out;
}

double relator_residual(const UnitaryRep& rep) {
  const auto n = static_cast<Eigen::Index>(rep.dim);
  double worst = 0.0;
  for (const fp::Word& r : rep.presentation.relators()) {
    worst = std::max(worst, (evaluate_word_matrix(rep, r) - Matrix::Identity(n, n)).norm());
  }
  return worst;
}

double relator_residual(const AugmentedUnitaryRep& rep) {
  const auto n = static_cast<Eigen::Index>(rep.dim);
  double worst = 0.0;
  for (const fp::Word& r : rep.presentation.base().relators()) {
    const SemidirectElement e = evaluate_word_pair(rep, r);
    if (e.sign != 1) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, (e.u - Matrix::Identity(n, n)).norm());
  }
  return worst;
}

UnitaryRep conjugate_rep(const UnitaryRep& rep, const Matrix& w) {
  std::vector<Matrix> conj;
  const Matrix w_inv = w.adjoint();
  for (const Matrix& m : rep.matrices) conj.push_back(w * m * w_inv);
  return make_unitary_rep(rep.presentation, std::move(conj));
}

}  // namespace klein::repvar
