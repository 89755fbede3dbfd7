#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "klein/word.hpp"

namespace klein::fp {

// A finitely presented group <g_0, ..., g_{n-1} | relators>.
class Presentation {
 public:
  // Validates: at least one generator, every relator non-empty with indices
  // in range. Missing names default to g1, g2, ...
  Presentation(std::size_t generator_count, std::vector<Word> relators,
               std::vector<std::string> generator_names = {});

  std::size_t generator_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::string& generator_name(std::size_t i) const { return names_.at(i); }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  // Throws DomainError if w uses a generator this presentation lacks.
  void check_word(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

// A presentation together with a surjection onto Z/2Z, given on generators.
class AugmentedPresentation {
 public:
  // Validates that every relator maps to 0 and some generator maps to 1.
  AugmentedPresentation(Presentation base, std::vector<std::uint8_t> augmentation);

  const Presentation& base() const noexcept { return base_; }
  const std::vector<std::uint8_t>& augmentation() const noexcept { return augmentation_; }
  std::size_t generator_count() const noexcept { return base_.generator_count(); }

  // First generator with augmentation 1; the default lift of the nontrivial
  // element and the transversal representative of the kernel.
  std::uint32_t first_odd_generator() const;

  friend bool operator==(const AugmentedPresentation&, const AugmentedPresentation&) = default;

 private:
  Presentation base_;
  std::vector<std::uint8_t> augmentation_;
};

// Image of w under the augmentation (0 or 1).
int augmentation_of_word(const AugmentedPresentation& ap, const Word& w);

Presentation free_group(std::size_t rank);

// <a1, b1, ..., ag, bg | [a1,b1]...[ag,bg]>. Genus 0 gives <g1 | g1>.
Presentation surface_group(int genus);

// <a1, ..., an | a1 a2 ... an>, n >= 2.
Presentation punctured_sphere_group(int punctures);

// <b1, ..., bn | b1^2, ..., bn^2> with every bi mapped to 1, n >= 2.
AugmentedPresentation real_punctured_line_group(int punctures);

// p extended by an involution s with s g s^{-1} = action(g). The action must
// square to the identity after free substitution.
AugmentedPresentation semidirect_with_involution(const Presentation& p,
                                                 const std::vector<Word>& action);

}  // namespace klein::fp
