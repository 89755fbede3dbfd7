#include "klein/solver.hpp"

#include <cmath>
#include <sstream>

#include "klein/errors.hpp"

namespace klein::repvar {

RelatorObjective::RelatorObjective(std::vector<fp::Word> relators, std::vector<int> signs,
                                   RealStructure alpha)
    : signs_(std::move(signs)), alpha_(std::move(alpha)) {
  for (const fp::Word& r : relators) {
    std::vector<Factor> factors;
    int running = 1;
    for (const fp::Letter& l : r) {
      if (l.gen >= signs_.size()) throw DomainError("relator uses an unknown generator");
      if (!l.inverse) {
        factors.push_back({l.gen, running > 0 ? Form::kPlain : Form::kTwisted});
        running *= signs_[l.gen];
      } else {
        running *= signs_[l.gen];
        factors.push_back({l.gen, running > 0 ? Form::kAdjoint : Form::kTwistedAdjoint});
      }
    }
    relators_.push_back(std::move(factors));
  }
}

RelatorObjective RelatorObjective::plain(const fp::Presentation& p, std::size_t dim) {
  return RelatorObjective(p.relators(), std::vector<int>(p.generator_count(), 1),
                          RealStructure::identity(dim));
}

RelatorObjective RelatorObjective::augmented(const fp::AugmentedPresentation& ap,
                                             const RealStructure& alpha) {
  return RelatorObjective(ap.base().relators(), augmentation_signs(ap), alpha);
}

Matrix RelatorObjective::factor_matrix(const Factor& f, const std::vector<Matrix>& u) const {
  const Matrix& m = u[f.gen];
  const Matrix& c = alpha_.matrix();
  switch (f.form) {
    case Form::kPlain:
      return m;
    case Form::kTwisted:
      return c * m.conjugate() * c.adjoint();
    case Form::kAdjoint:
      return m.adjoint();
    case Form::kTwistedAdjoint:
      return c * m.transpose() * c.adjoint();
  }
  return m;
}

double RelatorObjective::value(const std::vector<Matrix>& u) const {
  const auto n = static_cast<Eigen::Index>(dim());
  double total = 0.0;
  for (const auto& factors : relators_) {
    Matrix p = Matrix::Identity(n, n);
    for (const Factor& f : factors) p = p * factor_matrix(f, u);
    total += (p - Matrix::Identity(n, n)).squaredNorm();
  }
  return total;
}

double RelatorObjective::residual(const std::vector<Matrix>& u) const {
  const auto n = static_cast<Eigen::Index>(dim());
  double worst = 0.0;
  for (const auto& factors : relators_) {
    Matrix p = Matrix::Identity(n, n);
    for (const Factor& f : factors) p = p * factor_matrix(f, u);
    worst = std::max(worst, (p - Matrix::Identity(n, n)).norm());
  }
  return worst;
}

std::vector<Matrix> RelatorObjective::euclidean_gradient(const std::vector<Matrix>& u) const {
  const auto n = static_cast<Eigen::Index>(dim());
  const Matrix id = Matrix::Identity(n, n);
  const Matrix& c = alpha_.matrix();
  std::vector<Matrix> grad(u.size(), Matrix::Zero(n, n));
  for (const auto& factors : relators_) {
    const std::size_t m = factors.size();
    std::vector<Matrix> x;
    x.reserve(m);
    for (const Factor& f : factors) x.push_back(factor_matrix(f, u));
    // prefix[j] = x_0 ... x_{j-1}, suffix[j] = x_j ... x_{m-1}
    std::vector<Matrix> prefix(m + 1, id), suffix(m + 1, id);
    for (std::size_t j = 0; j < m; ++j) prefix[j + 1] = prefix[j] * x[j];
    for (std::size_t j = m; j-- > 0;) suffix[j] = x[j] * suffix[j + 1];
    const Matrix defect_adj = (prefix[m] - id).adjoint();
    // d||P - I||^2 = 2 Re tr(K dX_j) with K = suffix (P - I)^* prefix.
    for (std::size_t j = 0; j < m; ++j) {
      const Matrix k = suffix[j + 1] * defect_adj * prefix[j];
      Matrix& g = grad[factors[j].gen];
      switch (factors[j].form) {
        case Form::kPlain:
          g += 2.0 * k.adjoint();
          break;
        case Form::kAdjoint:
          g += 2.0 * k;
          break;
        case Form::kTwisted:
          g += 2.0 * (c.adjoint() * k * c).transpose();
          break;
        case Form::kTwistedAdjoint:
          g += 2.0 * (c.adjoint() * k * c).conjugate();
          break;
      }
    }
  }
  return grad;
}

std::vector<Matrix> RelatorObjective::riemannian_gradient(const std::vector<Matrix>& u) const {
  std::vector<Matrix> grad = euclidean_gradient(u);
  for (std::size_t i = 0; i < u.size(); ++i) grad[i] = u[i] * skew_hermitian_part(u[i].adjoint() * grad[i]);
  return grad;
}

std::vector<Matrix> random_start(std::size_t count, std::size_t dim, std::uint64_t seed) {
  require_positive_dim(dim);
  Rng rng(seed);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_unitary(dim, rng));
  return out;
}

namespace {

struct DescentResult {
  std::vector<Matrix> matrices;
  double residual;
  int iterations;
  bool converged;
};

DescentResult descend(const RelatorObjective& objective, std::vector<Matrix> u,
                      const SolveOptions& opts) {
  double f = objective.value(u);
  double res = objective.residual(u);
  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    if (res < opts.tol) return {std::move(u), res, it, true};
    const std::vector<Matrix> grad = objective.riemannian_gradient(u);
    bool accepted = false;
    for (double step = opts.step; step > 1e-18; step /= 2.0) {
      std::vector<Matrix> trial;
      trial.reserve(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) trial.push_back(polar_unitary(u[i] - step * grad[i]));
      const double f_trial = objective.value(trial);
      if (f_trial < f) {
        u = std::move(trial);
        f = f_trial;
        accepted = true;
        break;
      }
    }
    res = objective.residual(u);
    if (!accepted) break;  // no descent at any step size: stationary point
  }
  return {std::move(u), res, it, res < opts.tol};
}

[[noreturn]] void fail(DescentResult&& r, const SolveOptions& opts) {
  std::ostringstream msg;
  msg.precision(3);
  msg << "solver stopped after " << r.iterations << " iterations with residual " << r.residual
      << " (tolerance " << opts.tol << ")";
  throw ConvergenceError(msg.str(), std::move(r.matrices), r.residual, r.iterations);
}

}  // namespace

UnitaryRep solve_rep(const fp::Presentation& p, std::size_t dim, std::uint64_t seed,
                     const SolveOptions& opts) {
  require_positive_dim(dim);
  const RelatorObjective objective = RelatorObjective::plain(p, dim);
  DescentResult r = descend(objective, random_start(p.generator_count(), dim, seed), opts);
  if (!r.converged) fail(std::move(r), opts);
  UnitaryRep rep = make_unitary_rep(p, std::move(r.matrices));
  rep.iterations = r.iterations;
  return rep;
}

AugmentedUnitaryRep solve_augmented_rep(const fp::AugmentedPresentation& ap, std::size_t dim,
                                        const RealStructure& alpha, std::uint64_t seed,
                                        const SolveOptions& opts) {
  require_positive_dim(dim);
  if (alpha.dim() != dim) throw DomainError("real structure dimension does not match");
  const RelatorObjective objective = RelatorObjective::augmented(ap, alpha);
  DescentResult r = descend(objective, random_start(ap.generator_count(), dim, seed), opts);
  if (!r.converged) fail(std::move(r), opts);
  AugmentedUnitaryRep rep =
      make_augmented_rep(ap, alpha, std::move(r.matrices), augmentation_signs(ap));
  rep.iterations = r.iterations;
  return rep;
}

}  // namespace klein::repvar
