#include "klein/word.hpp"

#include <algorithm>
#include <string>

#include "klein/errors.hpp"

namespace klein::fp {

namespace {

// Stack-based free reduction: a single left-to-right pass suffices.
std::vector<Letter> freely_reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!out.empty() && out.back() == l.inverted()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(freely_reduce(letters)) {}

Word::Word(std::initializer_list<Letter> letters)
    : letters_(freely_reduce(std::span<const Letter>(letters.begin(), letters.size()))) {}

Word Word::generator(std::uint32_t gen, bool inverse) { return Word{Letter{gen, inverse}}; }

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(it->inverted());
  }
  return out;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  Word out;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                      letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return out;
}

std::uint32_t Word::generator_bound() const noexcept {
  std::uint32_t bound = 0;
  for (const Letter& l : letters_) bound = std::max(bound, l.gen + 1);
  return bound;
}

Word operator*(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  out *= rhs;
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  for (const Letter& l : rhs.letters_) {
    if (!letters_.empty() && letters_.back() == l.inverted()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  return *this;
}

Word reduce_word(std::span<const Letter> raw, std::size_t generator_count) {
  for (const Letter& l : raw) {
    if (l.gen >= generator_count) {
      throw DomainError("generator index " + std::to_string(l.gen) +
                        " out of range for " + std::to_string(generator_count) +
                        " generators");
    }
  }
  return Word(std::vector<Letter>(raw.begin(), raw.end()));
}

Word word_from_signed(std::span<const int> code) {
  std::vector<Letter> letters;
  letters.reserve(code.size());
  for (int c : code) {
    if (c == 0) throw DomainError("letter code 0 is not a generator");
    const bool inverse = c < 0;
    const int magnitude = inverse ? -c : c;
    letters.push_back(Letter{static_cast<std::uint32_t>(magnitude - 1), inverse});
  }
  return Word(std::move(letters));
}

std::vector<int> signed_code(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    const int c = static_cast<int>(l.gen) + 1;
    out.push_back(l.inverse ? -c : c);
  }
  return out;
}

Word substitute(const Word& w, std::span<const Word> images) {
  Word out;
  for (const Letter& l : w) {
    if (l.gen >= images.size()) {
      throw DomainError("substitution has no image for generator " + std::to_string(l.gen));
    }
    out *= l.inverse ? images[l.gen].inverse() : images[l.gen];
  }
  return out;
}

Word power(const Word& w, int exponent) {
  const Word base = exponent < 0 ? w.inverse() : w;
  Word out;
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) out *= base;
  return out;
}

}  // namespace klein::fp
