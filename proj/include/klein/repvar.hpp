#pragma once

#include <cstddef>
#include <vector>

#include "klein/presentation.hpp"
#include "klein/unitary.hpp"

namespace klein::repvar {

// Generators of a presentation mapped to U(n).
struct UnitaryRep {
  fp::Presentation presentation;
  std::size_t dim = 0;
  std::vector<Matrix> matrices;
  double residual = 0.0;  // max relator distance from I, Frobenius
  int iterations = 0;     // solver iterations that produced it, 0 otherwise
};

// Generators of an augmented presentation mapped to U(n) x| Z/2Z over the
// identity of Z/2Z: generator i goes to (matrices[i], signs[i]) with
// signs[i] = (-1)^augmentation(i).
struct AugmentedUnitaryRep {
  fp::AugmentedPresentation presentation;
  RealStructure real_structure;
  std::size_t dim = 0;
  std::vector<Matrix> matrices;
  std::vector<int> signs;
  double residual = 0.0;
  int iterations = 0;
};

// Validates shapes, rejects matrices further than 1e-6 from unitary,
// re-projects the rest by polar decomposition and fills in the residual.
UnitaryRep make_unitary_rep(fp::Presentation p, std::vector<Matrix> matrices);

// As above; additionally rejects signs that disagree with the augmentation.
AugmentedUnitaryRep make_augmented_rep(fp::AugmentedPresentation ap, RealStructure alpha,
                                       std::vector<Matrix> matrices, std::vector<int> signs);

// Signs forced by the augmentation.
std::vector<int> augmentation_signs(const fp::AugmentedPresentation& ap);

Matrix evaluate_word_matrix(const UnitaryRep& rep, const fp::Word& w);
SemidirectElement evaluate_word_pair(const AugmentedUnitaryRep& rep, const fp::Word& w);

// Max over relators of ||rho(r) - I||_F; 0 without relators. For augmented
// reps a relator landing in the anti-linear coset counts as +infinity.
double relator_residual(const UnitaryRep& rep);
double relator_residual(const AugmentedUnitaryRep& rep);

// The representation g -> W rep(g) W^{-1}.
UnitaryRep conjugate_rep(const UnitaryRep& rep, const Matrix& w);

std::vector<Matrix> identity_matrices(std::size_t count, std::size_t dim);

void require_positive_dim(std::size_t dim);

}  // namespace klein::repvar
