#pragma once

#include <optional>

#include "klein/kernel.hpp"
#include "klein/repvar.hpp"

namespace klein::repvar {

// chi = rho restricted to the kernel of the augmentation, on the kernel
// presentation's generators.
UnitaryRep restrict_rep(const AugmentedUnitaryRep& rep, const fp::KernelPresentation& kernel);
UnitaryRep restrict_rep(const AugmentedUnitaryRep& rep);

// kappa(chi)(f) = Ad_alpha(chi(sigma^{-1} f sigma)), evaluated on each kernel
// generator by rewriting the conjugated word into kernel generators.
// sigma must have augmentation 1 and chi must be a rep of the kernel.
UnitaryRep kappa(const UnitaryRep& chi, const fp::AugmentedPresentation& ap,
                 const fp::KernelPresentation& kernel, const RealStructure& alpha,
                 const fp::Word& sigma);
UnitaryRep kappa(const UnitaryRep& chi, const fp::AugmentedPresentation& ap,
                 const RealStructure& alpha, const fp::Word& sigma);

// max_g ||W chi1(g) W^{-1} - chi2(g)||_F.
double intertwining_residual(const UnitaryRep& chi1, const UnitaryRep& chi2, const Matrix& w);

// A unitary W with W chi1 W^{-1} = chi2 to within tol on every generator,
// found from the nullspace of the stacked intertwiner equations. Absent means
// no candidate verified; for reducible reps that is not a proof of
// non-conjugacy.
std::optional<Matrix> conjugator_search(const UnitaryRep& chi1, const UnitaryRep& chi2,
                                        double tol = 1e-8);

struct Certificate {
  Matrix w;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// Certifies that the restriction chi of rep is a fixed point of kappa up to
// conjugacy, using the explicit conjugator alpha rho(sigma)^{-1} = (U_s^{-1}, +1)
// where rho(sigma) = (U_s, -1). The accepted bound is tol plus the rep's own
// residual amplified by the longest rewritten word. Throws
// VerificationFailure when the bound is exceeded.
Certificate verify_fix_kappa(const AugmentedUnitaryRep& rep, const fp::Word& sigma,
                             double tol = 1e-6);

// The default lift: the first generator with augmentation 1.
fp::Word default_sigma(const fp::AugmentedPresentation& ap);

}  // namespace klein::repvar
