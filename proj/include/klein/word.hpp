#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace klein::fp {

// One letter g_i or g_i^{-1}.
struct Letter {
  std::uint32_t gen = 0;
  bool inverse = false;

  Letter inverted() const { return Letter{gen, !inverse}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A freely reduced word in the free group on the generators. Every
// constructor reduces, so no stored Word contains a cancelling pair.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  static Word generator(std::uint32_t gen, bool inverse = false);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;

  // Conjugate-equal word with no cancellation between its ends.
  Word cyclically_reduced() const;

  // Largest generator index plus one; 0 for the empty word.
  std::uint32_t generator_bound() const noexcept;

  friend Word operator*(const Word& lhs, const Word& rhs);
  Word& operator*=(const Word& rhs);

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Free reduction of a raw letter sequence, validating indices against
// generator_count. Throws DomainError on an out-of-range index.
Word reduce_word(std::span<const Letter> raw, std::size_t generator_count);

// Signed encoding used by the JSON schema: +(i+1) for g_i, -(i+1) for g_i^{-1}.
Word word_from_signed(std::span<const int> code);
std::vector<int> signed_code(const Word& w);

// Replaces every letter g_i by images[i] (inverted for g_i^{-1}).
Word substitute(const Word& w, std::span<const Word> images);

Word power(const Word& w, int exponent);

}  // namespace klein::fp
