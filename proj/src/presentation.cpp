#include "klein/presentation.hpp"

#include "klein/errors.hpp"

namespace klein::fp {

Presentation::Presentation(std::size_t generator_count, std::vector<Word> relators,
                           std::vector<std::string> generator_names)
    : names_(std::move(generator_names)), relators_(std::move(relators)) {
  if (generator_count == 0) throw DomainError("a presentation needs at least one generator");
  if (names_.empty()) {
    for (std::size_t i = 0; i < generator_count; ++i) names_.push_back("g" + std::to_string(i + 1));
  } else if (names_.size() != generator_count) {
    throw DomainError("expected " + std::to_string(generator_count) + " generator names, got " +
                      std::to_string(names_.size()));
  }
  for (const Word& r : relators_) {
    if (r.empty()) throw DomainError("relators must be non-empty after free reduction");
    check_word(r);
  }
}

void Presentation::check_word(const Word& w) const {
  if (w.generator_bound() > generator_count()) {
    throw DomainError("word uses generator " + std::to_string(w.generator_bound()) +
                      " but the presentation has " + std::to_string(generator_count()));
  }
}

AugmentedPresentation::AugmentedPresentation(Presentation base,
                                             std::vector<std::uint8_t> augmentation)
    : base_(std::move(base)), augmentation_(std::move(augmentation)) {
  if (augmentation_.size() != base_.generator_count()) {
    throw DomainError("augmentation must give one value per generator");
  }
  bool surjective = false;
  for (std::uint8_t v : augmentation_) {
    if (v > 1) throw DomainError("augmentation values must be 0 or 1");
    surjective = surjective || v == 1;
  }
  if (!surjective) throw DomainError("augmentation is not surjective: no generator maps to 1");
  for (std::size_t i = 0; i < base_.relators().size(); ++i) {
    if (augmentation_of_word(*this, base_.relators()[i]) != 0) {
      throw DomainError("relator " + std::to_string(i + 1) + " has augmentation 1");
    }
  }
}

std::uint32_t AugmentedPresentation::first_odd_generator() const {
  for (std::size_t i = 0; i < augmentation_.size(); ++i) {
    if (augmentation_[i] == 1) return static_cast<std::uint32_t>(i);
  }
  throw DomainError("augmentation is not surjective");
}

int augmentation_of_word(const AugmentedPresentation& ap, const Word& w) {
  ap.base().check_word(w);
  int parity = 0;
  for (const Letter& l : w) parity ^= ap.augmentation()[l.gen];
  return parity;
}

Presentation free_group(std::size_t rank) { return Presentation(rank, {}); }

Presentation surface_group(int genus) {
  if (genus < 0) throw DomainError("genus must be non-negative");
  if (genus == 0) return Presentation(1, {Word::generator(0)}, {"g1"});
  std::vector<std::string> names;
  Word relator;
  for (int i = 0; i < genus; ++i) {
    const auto a = static_cast<std::uint32_t>(2 * i);
    const auto b = a + 1;
    names.push_back("a" + std::to_string(i + 1));
    names.push_back("b" + std::to_string(i + 1));
    relator *= Word{Letter{a, false}, Letter{b, false}, Letter{a, true}, Letter{b, true}};
  }
  return Presentation(names.size(), {relator}, names);
}

Presentation punctured_sphere_group(int punctures) {
  if (punctures < 2) throw DomainError("a punctured sphere group needs at least 2 punctures");
  std::vector<std::string> names;
  std::vector<Letter> relator;
  for (int i = 0; i < punctures; ++i) {
    names.push_back("a" + std::to_string(i + 1));
    relator.push_back(Letter{static_cast<std::uint32_t>(i), false});
  }
  return Presentation(names.size(), {Word(relator)}, names);
}

AugmentedPresentation real_punctured_line_group(int punctures) {
  if (punctures < 2) throw DomainError("a punctured real line group needs at least 2 punctures");
  std::vector<std::string> names;
  std::vector<Word> relators;
  for (int i = 0; i < punctures; ++i) {
    names.push_back("b" + std::to_string(i + 1));
    relators.push_back(power(Word::generator(static_cast<std::uint32_t>(i)), 2));
  }
  Presentation base(names.size(), std::move(relators), names);
  return AugmentedPresentation(std::move(base),
                               std::vector<std::uint8_t>(static_cast<std::size_t>(punctures), 1));
}

AugmentedPresentation semidirect_with_involution(const Presentation& p,
                                                 const std::vector<Word>& action) {
  const std::size_t n = p.generator_count();
  if (action.size() != n) throw DomainError("action must give one image per generator");
  for (const Word& w : action) p.check_word(w);
  for (std::size_t i = 0; i < n; ++i) {
    if (substitute(action[i], action) != Word::generator(static_cast<std::uint32_t>(i))) {
      throw DomainError("action not involutive at free level (generator " +
                        p.generator_name(i) + ")");
    }
  }

  const auto s = static_cast<std::uint32_t>(n);
  std::vector<std::string> names = p.generator_names();
  names.push_back("s");
  std::vector<Word> relators = p.relators();
  relators.push_back(power(Word::generator(s), 2));
  for (std::size_t i = 0; i < n; ++i) {
    Word r = Word::generator(s) * action[i] * Word::generator(s, true) *
             Word::generator(static_cast<std::uint32_t>(i), true);
    relators.push_back(std::move(r));
  }
  std::vector<std::uint8_t> augmentation(n, 0);
  augmentation.push_back(1);
  return AugmentedPresentation(Presentation(n + 1, std::move(relators), std::move(names)),
                               std::move(augmentation));
}

}  // namespace klein::fp
