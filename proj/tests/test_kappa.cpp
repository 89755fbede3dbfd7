#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "klein/errors.hpp"
#include "klein/kappa.hpp"
#include "klein/kernel.hpp"
#include "klein/solver.hpp"

using namespace klein::repvar;
using klein::fp::Word;

namespace {

Word w(std::initializer_list<int> code) {
  std::vector<int> c(code);
  return klein::fp::word_from_signed(c);
}

Matrix swap_structure() {
  Matrix c(2, 2);
  c << 0, 1, 1, 0;
  return c;
}

UnitaryRep random_free_rep(std::size_t gens, std::size_t n, std::uint64_t seed) {
  klein::Rng rng(seed);
  std::vector<Matrix> m;
  for (std::size_t i = 0; i < gens; ++i) m.push_back(random_unitary(n, rng));
  return make_unitary_rep(klein::fp::free_group(gens), m);
}

}  // namespace

TEST_CASE("restriction evaluates the kernel generator words") {
  const auto ap = klein::fp::real_punctured_line_group(3);
  const AugmentedUnitaryRep rep = solve_augmented_rep(ap, 2, RealStructure::identity(2), 3);
  const klein::fp::KernelPresentation k(ap);
  const UnitaryRep chi = restrict_rep(rep, k);
  REQUIRE(chi.matrices.size() == k.generator_words().size());
  CHECK(chi.presentation == k.presentation());
  for (std::size_t i = 0; i < chi.matrices.size(); ++i) {
    const SemidirectElement x = evaluate_word_pair(rep, k.generator_words()[i]);
    CHECK(x.sign == 1);
    CHECK((x.u - chi.matrices[i]).norm() < 1e-12);
  }
}

TEST_CASE("kappa on U(1) reps of the real line kernel") {
  const auto ap = klein::fp::real_punctured_line_group(3);
  const klein::fp::KernelPresentation k(ap);
  Matrix z2(1, 1), z3(1, 1);
  z2(0, 0) = std::polar(1.0, 0.4);
  z3(0, 0) = std::polar(1.0, -1.3);
  const UnitaryRep chi = make_unitary_rep(k.presentation(), {z2, z3});
  // Conjugation by b1 inverts each b1 b_j and complex conjugation inverts it back.
  const UnitaryRep kc = kappa(chi, ap, k, RealStructure::identity(1), w({1}));
  CHECK((kc.matrices[0] - z2).norm() < 1e-14);
  CHECK((kc.matrices[1] - z3).norm() < 1e-14);
  // With sigma = b2, b1 b2 goes to b2 b1 = (b1 b2)^-1.
  const UnitaryRep kc2 = kappa(chi, ap, RealStructure::identity(1), w({2}));
  CHECK((kc2.matrices[0] - z2).norm() < 1e-14);
  CHECK_THROWS_AS(kappa(chi, ap, RealStructure::identity(1), w({1, 2})), klein::DomainError);
}

TEST_CASE("restrictions are fixed by kappa") {
  const RealStructure swap(swap_structure());
  const auto dihedral = klein::fp::semidirect_with_involution(klein::fp::free_group(1), {w({-1})});
  const auto torus = klein::fp::semidirect_with_involution(klein::fp::surface_group(1), {w({-1}), w({2})});
  for (const auto& ap : {dihedral, torus, klein::fp::real_punctured_line_group(4)}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const AugmentedUnitaryRep rep = solve_augmented_rep(ap, 2, swap, seed);
      const Certificate c = verify_fix_kappa(rep, default_sigma(ap));
      CHECK(c.passed);
      CHECK(c.residual < 1e-6);
      CHECK(c.residual <= c.tolerance);
      CHECK(unitarity_defect(c.w) < 1e-10);
      const UnitaryRep chi = restrict_rep(rep);
      const UnitaryRep kc = kappa(chi, ap, swap, default_sigma(ap));
      CHECK(intertwining_residual(chi, kc, c.w) == doctest::Approx(c.residual));
    }
  }
}

TEST_CASE("kappa is an involution up to conjugacy") {
  const RealStructure swap(swap_structure());
  const auto ap = klein::fp::real_punctured_line_group(3);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const AugmentedUnitaryRep rep = solve_augmented_rep(ap, 2, swap, seed);
    const UnitaryRep chi = restrict_rep(rep);
    // An arbitrary kernel rep, not necessarily in the image of restriction.
    const UnitaryRep other = make_unitary_rep(chi.presentation, random_free_rep(2, 2, seed + 50).matrices);
    for (const UnitaryRep& x : {chi, other}) {
      const UnitaryRep kk = kappa(kappa(x, ap, swap, w({1})), ap, swap, w({1}));
      const auto c = conjugator_search(kk, x, 1e-8);
      REQUIRE(c.has_value());
      CHECK(intertwining_residual(kk, x, *c) < 1e-8);
    }
  }
}

TEST_CASE("conjugator search is reflexive and symmetric") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const UnitaryRep a = random_free_rep(2, 3, seed);
    const auto self = conjugator_search(a, a);
    REQUIRE(self.has_value());
    CHECK(intertwining_residual(a, a, *self) < 1e-8);

    klein::Rng rng(seed + 100);
    const Matrix g = random_unitary(3, rng);
    const UnitaryRep b = conjugate_rep(a, g);
    const auto fwd = conjugator_search(a, b);
    const auto back = conjugator_search(b, a);
    REQUIRE(fwd.has_value());
    REQUIRE(back.has_value());
    CHECK(intertwining_residual(a, b, *fwd) < 1e-8);
    CHECK(intertwining_residual(b, a, *back) < 1e-8);
    // A generic pair of unitaries is irreducible, so by Schur the conjugator
    // is g up to a phase.
    const Matrix s = g.adjoint() * *fwd;
    CHECK((s - s(0, 0) * Matrix::Identity(3, 3)).norm() < 1e-8);
    CHECK(std::abs(std::abs(s(0, 0)) - 1.0) < 1e-8);
  }
}

TEST_CASE("non-conjugate reps are not matched") {
  const UnitaryRep a = random_free_rep(2, 2, 1);
  const UnitaryRep b = random_free_rep(2, 2, 2);
  CHECK_FALSE(conjugator_search(a, b).has_value());
  Matrix one = Matrix::Identity(1, 1);
  const UnitaryRep plus = make_unitary_rep(klein::fp::free_group(1), {one});
  const UnitaryRep minus = make_unitary_rep(klein::fp::free_group(1), {-one});
  CHECK_FALSE(conjugator_search(plus, minus).has_value());
  CHECK_THROWS_AS(conjugator_search(a, random_free_rep(2, 3, 1)), klein::DomainError);
}

TEST_CASE("reducible reps with a repeated summand") {
  // chi = diag(z, z, w): the intertwiner space is 5-dimensional.
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = d(1, 1) = std::polar(1.0, 0.5);
  d(2, 2) = std::polar(1.0, 2.0);
  const UnitaryRep a = make_unitary_rep(klein::fp::free_group(1), {d});
  klein::Rng rng(8);
  const UnitaryRep b = conjugate_rep(a, random_unitary(3, rng));
  const auto c = conjugator_search(a, b);
  REQUIRE(c.has_value());
  CHECK(intertwining_residual(a, b, *c) < 1e-8);
}

TEST_CASE("default sigma and certificate validation") {
  const auto ap = klein::fp::semidirect_with_involution(klein::fp::free_group(1), {w({-1})});
  CHECK(default_sigma(ap) == w({2}));
  const AugmentedUnitaryRep rep = solve_augmented_rep(ap, 1, RealStructure::identity(1), 0);
  CHECK_THROWS_AS(verify_fix_kappa(rep, w({1})), klein::DomainError);
  CHECK(verify_fix_kappa(rep, w({1, 2})).passed);
}
