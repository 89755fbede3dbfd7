#pragma once

#include <cstdint>
#include <vector>

#include "klein/presentation.hpp"
#include "klein/repvar.hpp"

namespace klein::repvar {

struct SolveOptions {
  double tol = 1e-8;          // stop once the relator residual is below this
  int max_iterations = 10000;
  double step = 0.1;          // initial step of every backtracking line search
};

// f(U) = sum over relators r of ||rho(r) - I||_F^2, with rho evaluated in
// U(n) x| Z/2Z. A plain (non-augmented) problem has every sign +1.
class RelatorObjective {
 public:
  RelatorObjective(std::vector<fp::Word> relators, std::vector<int> signs, RealStructure alpha);

  static RelatorObjective plain(const fp::Presentation& p, std::size_t dim);
  static RelatorObjective augmented(const fp::AugmentedPresentation& ap, const RealStructure& alpha);

  double value(const std::vector<Matrix>& u) const;
  double residual(const std::vector<Matrix>& u) const;

  // G with df = Re tr(G^* dU) for each generator.
  std::vector<Matrix> euclidean_gradient(const std::vector<Matrix>& u) const;

  // Projection of the Euclidean gradient onto the tangent space U * skew(U^* G).
  std::vector<Matrix> riemannian_gradient(const std::vector<Matrix>& u) const;

  std::size_t generator_count() const noexcept { return signs_.size(); }
  std::size_t dim() const noexcept { return alpha_.dim(); }

 private:
  // How a letter's matrix enters the product, given the running sign.
  enum class Form { kPlain, kTwisted, kAdjoint, kTwistedAdjoint };
  struct Factor {
    std::uint32_t gen;
    Form form;
  };

  Matrix factor_matrix(const Factor& f, const std::vector<Matrix>& u) const;

  std::vector<std::vector<Factor>> relators_;
  std::vector<int> signs_;
  RealStructure alpha_;
};

// Riemannian gradient descent on U(n)^generators from a seeded Haar-random
// start, with polar retraction and step halving until the objective
// decreases. Throws ConvergenceError (carrying the best iterate) if the
// residual stays above opts.tol.
UnitaryRep solve_rep(const fp::Presentation& p, std::size_t dim, std::uint64_t seed,
                     const SolveOptions& opts = {});

AugmentedUnitaryRep solve_augmented_rep(const fp::AugmentedPresentation& ap, std::size_t dim,
                                        const RealStructure& alpha, std::uint64_t seed,
                                        const SolveOptions& opts = {});

// Unsolved starting point used by the solvers for this seed.
std::vector<Matrix> random_start(std::size_t count, std::size_t dim, std::uint64_t seed);

}  // namespace klein::repvar
