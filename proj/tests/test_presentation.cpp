#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klein/errors.hpp"
#include "klein/presentation.hpp"

using namespace klein::fp;

namespace {

Word w(std::initializer_list<int> code) {
  std::vector<int> c(code);
  return word_from_signed(c);
}

}  // namespace

TEST_CASE("surface group relator is the product of commutators") {
  const Presentation p = surface_group(2);
  CHECK(p.generator_count() == 4);
  CHECK(p.generator_names() == std::vector<std::string>{"a1", "b1", "a2", "b2"});
  REQUIRE(p.relators().size() == 1);
  CHECK(signed_code(p.relators()[0]) == std::vector<int>{1, 2, -1, -2, 3, 4, -3, -4});
  const Presentation sphere = surface_group(0);
  CHECK(sphere.generator_count() == 1);
  CHECK(sphere.relators() == std::vector<Word>{w({1})});
  CHECK_THROWS_AS(surface_group(-1), klein::DomainError);
}

TEST_CASE("punctured sphere and real line groups") {
  const Presentation p = punctured_sphere_group(3);
  CHECK(p.relators() == std::vector<Word>{w({1, 2, 3})});
  CHECK_THROWS_AS(punctured_sphere_group(1), klein::DomainError);

  const AugmentedPresentation r = real_punctured_line_group(3);
  CHECK(r.base().generator_names() == std::vector<std::string>{"b1", "b2", "b3"});
  CHECK(r.augmentation() == std::vector<std::uint8_t>{1, 1, 1});
  CHECK(r.base().relators() == std::vector<Word>{w({1, 1}), w({2, 2}), w({3, 3})});
  CHECK(r.first_odd_generator() == 0);
  CHECK_THROWS_AS(real_punctured_line_group(1), klein::DomainError);
}

TEST_CASE("augmentation validation") {
  const Presentation p(2, {w({1, 1})});
  CHECK_NOTHROW(AugmentedPresentation(p, {1, 0}));
  CHECK_THROWS_AS(AugmentedPresentation(p, {0, 0}), klein::DomainError);
  CHECK_THROWS_AS(AugmentedPresentation(p, {1}), klein::DomainError);
  CHECK_THROWS_AS(AugmentedPresentation(Presentation(2, {w({1, 2})}), {1, 0}),
                  klein::DomainError);
  const AugmentedPresentation ap(p, {1, 0});
  CHECK(augmentation_of_word(ap, w({1, 2, 1, -2})) == 0);
  CHECK(augmentation_of_word(ap, w({-1, 2})) == 1);
}

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(Presentation(0, {}), klein::DomainError);
  CHECK_THROWS_AS(Presentation(1, {w({2})}), klein::DomainError);
  CHECK_THROWS_AS(Presentation(1, {Word()}), klein::DomainError);
  CHECK_THROWS_AS(Presentation(2, {}, {"x"}), klein::DomainError);
  const Presentation p(2, {});
  CHECK(p.generator_names() == std::vector<std::string>{"g1", "g2"});
  CHECK_THROWS_AS(p.check_word(w({3})), klein::DomainError);
  CHECK(free_group(3).relators().empty());
}

TEST_CASE("semidirect product with an involution") {
  // Infinite dihedral group: s a s^-1 = a^-1.
  const AugmentedPresentation d = semidirect_with_involution(free_group(1), {w({-1})});
  CHECK(d.generator_count() == 2);
  CHECK(d.base().generator_names().back() == "s");
  CHECK(d.augmentation() == std::vector<std::uint8_t>{0, 1});
  CHECK(d.base().relators().size() == 2);

  const AugmentedPresentation t = semidirect_with_involution(surface_group(1), {w({-1}), w({2})});
  CHECK(t.generator_count() == 3);
  CHECK(t.base().relators().size() == 4);

  CHECK_THROWS_AS(semidirect_with_involution(free_group(1), {w({1, 1})}), klein::DomainError);
  CHECK_THROWS_AS(semidirect_with_involution(free_group(2), {w({2})}), klein::DomainError);
}
