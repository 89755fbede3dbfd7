#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "klein/errors.hpp"
#include "klein/topology.hpp"

using namespace klein::topology;

namespace {

// Brute force over the box 0 <= k <= g + 3, a in {0, 1}, using the
// conditions written out directly.
std::vector<TopologicalType> brute_force_types(int g) {
  std::vector<TopologicalType> out;
  for (int a = 0; a <= 1; ++a) {
    for (int k = 0; k <= g + 3; ++k) {
      bool ok = k <= g + 1;
      if (a == 0) ok = ok && k >= 1 && (g + 1 - k) % 2 == 0;
      if (a == 1) ok = ok && k <= g;
      if (ok) out.push_back({g, k, a});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration matches a brute-force scan") {
  for (int g = 0; g <= 30; ++g) {
    const auto types = enumerate_topological_types(g);
    CHECK(types == brute_force_types(g));
    CHECK(static_cast<int>(types.size()) == count_topological_types(g));
    CHECK(count_topological_types(g) == (3 * g + 4) / 2);
  }
}

TEST_CASE("small genus spot values") {
  CHECK(count_topological_types(0) == 2);
  CHECK(count_topological_types(1) == 3);
  CHECK(count_topological_types(2) == 5);
  CHECK(count_topological_types(3) == 6);
  const std::vector<TopologicalType> g0{{0, 1, 0}, {0, 0, 1}};
  CHECK(enumerate_topological_types(0) == g0);
}

TEST_CASE("invalid types are rejected with the failing condition") {
  CHECK_FALSE(weichold_valid({2, 4, 0}));
  CHECK_FALSE(weichold_valid({2, 2, 0}));
  CHECK_FALSE(weichold_valid({2, 0, 0}));
  CHECK_FALSE(weichold_valid({2, 3, 1}));
  CHECK_FALSE(weichold_valid({1, 1, 2}));
  CHECK_FALSE(weichold_valid({-1, 0, 1}));
  CHECK(weichold_violation({2, 3, 0}).empty());
  CHECK_FALSE(weichold_violation({2, 2, 0}).empty());
  CHECK_THROWS_AS(quotient_surface({2, 2, 0}), klein::DomainError);
  CHECK_THROWS_AS(is_maximal_curve({0, 2, 0}), klein::DomainError);
  CHECK_THROWS_AS(enumerate_topological_types(-1), klein::DomainError);
}

TEST_CASE("quotients of known types") {
  // Real elliptic curve with two ovals: annulus.
  CHECK(quotient_surface({1, 2, 0}) == CompactSurface{true, 0, 2});
  // Genus 0 without real points: the real projective plane.
  CHECK(quotient_surface({0, 0, 1}) == CompactSurface{false, 1, 0});
  // Genus 0 with one real circle: the disc.
  CHECK(quotient_surface({0, 1, 0}) == CompactSurface{true, 0, 1});
  // Genus 1, one circle, non-dividing: the Moebius band.
  CHECK(quotient_surface({1, 1, 1}) == CompactSurface{false, 1, 1});
  // Genus 1, no real points: the Klein bottle.
  CHECK(quotient_surface({1, 0, 1}) == CompactSurface{false, 2, 0});
}

TEST_CASE("double inverts quotient and halves the Euler characteristic") {
  for (int g = 0; g <= 25; ++g) {
    for (const auto& t : enumerate_topological_types(g)) {
      const CompactSurface s = quotient_surface(t);
      CHECK(double_surface(s) == t);
      CHECK(euler_characteristic(s) == 1 - g);
      CHECK(2 * euler_characteristic(s) == 2 - 2 * g);
    }
  }
}

TEST_CASE("every compact surface with a connected double arises exactly once") {
  std::set<TopologicalType> seen;
  for (int chi = 1; chi >= -6; --chi) {
    for (int b = 0; b <= 8; ++b) {
      for (bool orientable : {true, false}) {
        // chi = 2 - 2h - b (orientable) or 2 - c - b.
        const int rest = 2 - chi - b;
        if (rest < 0) continue;
        if (orientable && rest % 2 != 0) continue;
        const int h = orientable ? rest / 2 : rest;
        if (!orientable && h == 0) continue;
        if (orientable && b == 0) continue;
        const CompactSurface s{orientable, h, b};
        const TopologicalType t = double_surface(s);
        CHECK(weichold_valid(t));
        CHECK(quotient_surface(t) == s);
        CHECK(seen.insert(t).second);
      }
    }
  }
}

TEST_CASE("Harnack bound and maximal curves") {
  for (int g = 0; g <= 20; ++g) {
    int maximal = 0;
    for (const auto& t : enumerate_topological_types(g)) {
      CHECK(t.k <= g + 1);
      if (is_maximal_curve(t)) {
        ++maximal;
        CHECK(t.a == 0);
        CHECK(quotient_surface(t) == CompactSurface{true, 0, g + 1});
      }
    }
    CHECK(maximal == 1);
  }
}

TEST_CASE("surface validation") {
  CHECK_THROWS_AS(double_surface({true, 2, 0}), klein::DomainError);
  CHECK_THROWS_AS(double_surface({false, 0, 1}), klein::DomainError);
  CHECK_THROWS_AS(double_surface({true, -1, 2}), klein::DomainError);
  CHECK_THROWS_AS(euler_characteristic({true, 0, -1}), klein::DomainError);
  CHECK(euler_characteristic({true, 0, 0}) == 2);
}
