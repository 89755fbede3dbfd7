#pragma once

// Topological types (g, k, a) of compact Real Riemann surfaces and the
// compact surfaces with boundary that arise as their quotients.
//
// Convention: a = 0 means dividing (the complement of the real circles is
// disconnected), a = 1 means non-dividing.

#include <compare>
#include <string>
#include <vector>

namespace klein::topology {

struct TopologicalType {
  int g = 0;  // genus of the complex surface
  int k = 0;  // number of real circles
  int a = 0;  // 0 dividing, 1 non-dividing

  friend auto operator<=>(const TopologicalType&, const TopologicalType&) = default;
};

struct CompactSurface {
  bool orientable = true;
  int handles_or_crosscaps = 0;  // handles if orientable, crosscaps if not
  int boundary = 0;              // number of boundary circles

  friend bool operator==(const CompactSurface&, const CompactSurface&) = default;
};

// Empty string if t is a valid type, otherwise a description of the first
// violated condition.
std::string weichold_violation(const TopologicalType& t);

bool weichold_valid(const TopologicalType& t);

// All valid types of genus g, ordered by (a, k).
std::vector<TopologicalType> enumerate_topological_types(int g);

// floor((3g + 4) / 2).
int count_topological_types(int g);

// Sigma / tau for a valid type. Throws DomainError naming the violated
// condition otherwise.
CompactSurface quotient_surface(const TopologicalType& t);

// The orientable double of s with its orientation-reversing involution.
// Closed orientable input has a disconnected double and is rejected.
TopologicalType double_surface(const CompactSurface& s);

int euler_characteristic(const CompactSurface& s);

// k == g + 1. Throws DomainError on invalid t.
bool is_maximal_curve(const TopologicalType& t);

void validate(const CompactSurface& s);

}  // namespace klein::topology
