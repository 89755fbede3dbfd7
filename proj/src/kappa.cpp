#include "klein/kappa.hpp"

#include <cmath>
#include <sstream>

#include "klein/errors.hpp"

namespace klein::repvar {

namespace {

void require_odd(const fp::AugmentedPresentation& ap, const fp::Word& sigma) {
  if (fp::augmentation_of_word(ap, sigma) != 1) {
    throw DomainError("sigma must have augmentation 1");
  }
}

// All words of length <= max_len in the generators and their inverses.
std::vector<fp::Word> short_words(std::size_t generators, std::size_t max_len) {
  std::vector<fp::Word> layer{fp::Word{}}, out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<fp::Word> next;
    for (const fp::Word& w : layer) {
      for (std::uint32_t g = 0; g < generators; ++g) {
        for (bool inv : {false, true}) {
          fp::Word v = w * fp::Word::generator(g, inv);
          if (v.size() == len) next.push_back(std::move(v));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Column-major vec: vec(A W - W B) = (I (x) A - B^T (x) I) vec(W).
Matrix intertwiner_system(const UnitaryRep& chi1, const UnitaryRep& chi2) {
  const auto n = static_cast<Eigen::Index>(chi1.dim);
  const auto gens = static_cast<Eigen::Index>(chi1.matrices.size());
  Matrix system = Matrix::Zero(gens * n * n, n * n);
  for (Eigen::Index g = 0; g < gens; ++g) {
    const Matrix& a = chi2.matrices[static_cast<std::size_t>(g)];
    const Matrix& b = chi1.matrices[static_cast<std::size_t>(g)];
    for (Eigen::Index col = 0; col < n; ++col) {
      for (Eigen::Index row = 0; row < n; ++row) {
        // Unknown W(row, col) sits at column index col * n + row.
        const Eigen::Index unknown = col * n + row;
        for (Eigen::Index i = 0; i < n; ++i) {
          // (A W)(i, col) picks A(i, row) W(row, col).
          system(g * n * n + col * n + i, unknown) += a(i, row);
        }
        for (Eigen::Index j = 0; j < n; ++j) {
          // (W B)(row, j) picks W(row, col) B(col, j).
          system(g * n * n + j * n + row, unknown) -= b(col, j);
        }
      }
    }
  }
  return system;
}

Matrix unvec(const Eigen::VectorXcd& v, Eigen::Index n) {
  Matrix w(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index row = 0; row < n; ++row) w(row, col) = v(col * n + row);
  }
  return w;
}

}  // namespace

fp::Word default_sigma(const fp::AugmentedPresentation& ap) {
  return fp::Word::generator(ap.first_odd_generator());
}

UnitaryRep restrict_rep(const AugmentedUnitaryRep& rep, const fp::KernelPresentation& kernel) {
  std::vector<Matrix> matrices;
  for (const fp::Word& w : kernel.generator_words()) {
    const SemidirectElement e = evaluate_word_pair(rep, w);
    if (e.sign != 1) throw DomainError("kernel generator evaluated to an anti-linear element");
    matrices.push_back(e.u);
  }
  return make_unitary_rep(kernel.presentation(), std::move(matrices));
}

UnitaryRep restrict_rep(const AugmentedUnitaryRep& rep) {
  return restrict_rep(rep, fp::kernel_presentation(rep.presentation));
}

UnitaryRep kappa(const UnitaryRep& chi, const fp::AugmentedPresentation& ap,
                 const fp::KernelPresentation& kernel, const RealStructure& alpha,
                 const fp::Word& sigma) {
  require_odd(ap, sigma);
  if (!(chi.presentation == kernel.presentation())) {
    throw DomainError("chi is not a representation of the kernel presentation");
  }
  if (alpha.dim() != chi.dim) throw DomainError("real structure dimension does not match chi");
  std::vector<Matrix> matrices;
  for (const fp::Word& w : kernel.generator_words()) {
    const fp::Word conjugated = sigma.inverse() * w * sigma;
    matrices.push_back(alpha.twist(evaluate_word_matrix(chi, kernel.rewrite(conjugated))));
  }
  return make_unitary_rep(chi.presentation, std::move(matrices));
}

UnitaryRep kappa(const UnitaryRep& chi, const fp::AugmentedPresentation& ap,
                 const RealStructure& alpha, const fp::Word& sigma) {
  return kappa(chi, ap, fp::kernel_presentation(ap), alpha, sigma);
}

double intertwining_residual(const UnitaryRep& chi1, const UnitaryRep& chi2, const Matrix& w) {
  const Matrix w_inv = w.adjoint();
  double worst = 0.0;
  for (std::size_t g = 0; g < chi1.matrices.size(); ++g) {
    worst = std::max(worst, (w * chi1.matrices[g] * w_inv - chi2.matrices[g]).norm());
  }
  return worst;
}

std::optional<Matrix> conjugator_search(const UnitaryRep& chi1, const UnitaryRep& chi2,
                                        double tol) {
  if (!(chi1.presentation == chi2.presentation)) {
    throw DomainError("conjugator search needs representations of the same presentation");
  }
  if (chi1.dim != chi2.dim) throw DomainError("conjugator search needs equal dimensions");
  const auto n = static_cast<Eigen::Index>(chi1.dim);

  // |tr(W A W^{-1}) - tr(B)| <= sqrt(n) ||W A W^{-1} - B||_F, and a word of
  // length L accumulates at most L generator errors.
  for (const fp::Word& w : short_words(chi1.matrices.size(), 3)) {
    const double gap =
        std::abs(evaluate_word_matrix(chi1, w).trace() - evaluate_word_matrix(chi2, w).trace());
    const double bound = std::sqrt(static_cast<double>(n)) * static_cast<double>(w.size()) * tol;
    if (gap > bound * (1.0 + 1e-9) + 1e-12) return std::nullopt;
  }

  const Matrix system = intertwiner_system(chi1, chi2);
  Eigen::JacobiSVD<Matrix> svd(system, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const Matrix& v = svd.matrixV();
  const Eigen::Index unknowns = n * n;

  // Right singular vectors whose singular value is small relative to the
  // largest one; the smallest is always tried.
  const double scale = std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  std::vector<Eigen::Index> candidates;
  for (Eigen::Index i = 0; i < unknowns; ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;
    if (s <= 1e-4 * scale) candidates.push_back(i);
  }
  if (candidates.empty()) candidates.push_back(unknowns - 1);

  auto attempt = [&](const Eigen::VectorXcd& x) -> std::optional<Matrix> {
    const Matrix w = unvec(x, n);
    if (w.norm() == 0.0) return std::nullopt;
    const Matrix u = polar_unitary(w);
    if (intertwining_residual(chi1, chi2, u) < tol) return u;
    return std::nullopt;
  };

  // A generic combination of nullspace vectors is invertible, and the polar
  // part of an invertible intertwiner between unitary reps intertwines.
  if (candidates.size() > 1) {
    Rng rng(0x6b617070);
    Eigen::VectorXcd mix = Eigen::VectorXcd::Zero(unknowns);
    for (Eigen::Index i : candidates) mix += rng.complex_gaussian() * v.col(i);
    if (auto u = attempt(mix)) return u;
  }
  for (Eigen::Index i : candidates) {
    if (auto u = attempt(v.col(i))) return u;
  }
  return std::nullopt;
}

Certificate verify_fix_kappa(const AugmentedUnitaryRep& rep, const fp::Word& sigma, double tol) {
  require_odd(rep.presentation, sigma);
  const fp::KernelPresentation kernel = fp::kernel_presentation(rep.presentation);
  const UnitaryRep chi = restrict_rep(rep, kernel);
  const UnitaryRep kchi = kappa(chi, rep.presentation, kernel, rep.real_structure, sigma);

  const SemidirectElement rho_sigma = evaluate_word_pair(rep, sigma);
  Certificate cert;
  cert.w = rho_sigma.u.adjoint();
  cert.residual = intertwining_residual(chi, kchi, cert.w);

  std::size_t longest = 1;
  for (const fp::Word& w : kernel.generator_words()) {
    longest = std::max(longest, kernel.expand(kernel.rewrite(sigma.inverse() * w * sigma)).size() +
                                    w.size() + 2 * sigma.size());
  }
  cert.tolerance = tol + static_cast<double>(longest) * rep.residual;
  cert.passed = cert.residual < cert.tolerance;
  if (!cert.passed) {
    std::ostringstream msg;
    msg << "Fix(kappa) certificate failed: residual " << cert.residual << " exceeds "
        << cert.tolerance;
    throw VerificationFailure(msg.str(), cert.residual);
  }
  return cert;
}

}  // namespace klein::repvar
