#pragma once

#include <cstdint>
#include <vector>

#include "klein/presentation.hpp"

namespace klein::fp {

// Presentation of ker(augmentation) obtained by Reidemeister-Schreier
// rewriting with the transversal {1, t}, followed by a light Tietze pass that
// only removes generators made redundant by relators of length <= 2.
class KernelPresentation {
 public:
  explicit KernelPresentation(const AugmentedPresentation& ap);

  const Presentation& presentation() const noexcept { return presentation_; }

  // For each kernel generator, the word in the ambient generators it stands for.
  const std::vector<Word>& generator_words() const noexcept { return generator_words_; }

  // The transversal representative t of the odd coset, as a one-letter word.
  const Word& transversal_rep() const noexcept { return transversal_; }

  // Rewrites a word of augmentation 0 as a word in the kernel generators.
  // Throws DomainError("word not in kernel") otherwise.
  Word rewrite(const Word& w) const;

  // Expands a word in the kernel generators back into ambient generators.
  Word expand(const Word& kernel_word) const;

 private:
  // Raw rewriting into Schreier generators (before Tietze).
  Word rewrite_schreier(const Word& w, int start_coset) const;

  std::vector<std::uint8_t> augmentation_;
  std::uint32_t t_ = 0;
  std::size_t ambient_count_ = 0;
  // Index of the Schreier generator for (coset, ambient generator), or -1 if
  // it is the trivial tree generator for (0, t).
  std::vector<std::int32_t> schreier_index_[2];
  // Each Schreier generator expressed in the surviving kernel generators.
  std::vector<Word> schreier_to_kernel_;
  Presentation presentation_;
  std::vector<Word> generator_words_;
  Word transversal_;
};

KernelPresentation kernel_presentation(const AugmentedPresentation& ap);

Word rewrite_in_kernel(const AugmentedPresentation& ap, const Word& w);

}  // namespace klein::fp
