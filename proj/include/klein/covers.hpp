#pragma once

#include <cstdint>
#include <vector>

#include "klein/kernel.hpp"
#include "klein/presentation.hpp"

namespace klein::covers {

// One-line notation: perm[x] is the image of x.
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t degree);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer after inner
Permutation inverse(const Permutation& p);

// A finite set {0..degree-1} with one permutation per generator. Left action:
// the word uv acts as u applied after v.
struct PermutationAction {
  std::size_t degree = 0;
  std::vector<Permutation> images;

  friend auto operator<=>(const PermutationAction&, const PermutationAction&) = default;
};

// Checks shapes and that every relator of p acts trivially.
PermutationAction make_action(const fp::Presentation& p, std::vector<Permutation> images);
bool satisfies_relators(const fp::Presentation& p, const PermutationAction& action);

Permutation evaluate_word_perm(const PermutationAction& action, const fp::Word& w);

struct EnumerationOptions {
  bool up_to_conjugacy = false;
  std::uint64_t budget = 10'000'000;  // node expansions
};

// Every tuple of degree-n permutations satisfying the relators, in
// lexicographic order of (images[0], images[1], ...). With up_to_conjugacy
// only the lexicographically minimal member of each Sym(n)-orbit is kept.
// Throws ResourceError (carrying the number found so far) when the budget
// is exhausted.
std::vector<PermutationAction> enumerate_actions(const fp::Presentation& p, std::size_t degree,
                                                 const EnumerationOptions& options = {});

// Size of the simultaneous-conjugation orbit of the action under Sym(degree).
std::uint64_t conjugacy_orbit_size(const PermutationAction& action);

// Lexicographically minimal simultaneous conjugate.
PermutationAction canonical_conjugate(const PermutationAction& action);

std::vector<std::vector<std::uint32_t>> orbit_decomposition(const PermutationAction& action);
bool is_transitive(const PermutationAction& action);

// True iff the point stabilizers coincide (the cover is regular). Throws
// DomainError for intransitive input.
bool is_galois(const PermutationAction& action);

// Schreier generators of the stabilizer of point, read off a breadth-first
// Schreier tree. Tree edges (trivial words) are omitted.
std::vector<fp::Word> stabilizer_schreier_generators(const PermutationAction& action,
                                                     std::uint32_t point);

// The action of the kernel of the augmentation, on the kernel presentation's
// generators. Its orbits are the components of the underlying complex cover.
PermutationAction restrict_action_to_kernel(const fp::KernelPresentation& kernel,
                                            const PermutationAction& action);
PermutationAction restrict_action_to_kernel(const fp::AugmentedPresentation& ap,
                                            const PermutationAction& action);

}  // namespace klein::covers
