#include "klein/topology.hpp"

#include "klein/errors.hpp"

namespace klein::topology {

namespace {

std::string describe(const TopologicalType& t) {
  return "(g=" + std::to_string(t.g) + ", k=" + std::to_string(t.k) +
         ", a=" + std::to_string(t.a) + ")";
}

void require_valid(const TopologicalType& t) {
  if (auto why = weichold_violation(t); !why.empty()) {
    throw DomainError("invalid topological type " + describe(t) + ": " + why);
  }
}

}  // namespace

std::string weichold_violation(const TopologicalType& t) {
  if (t.g < 0 || t.k < 0) return "g and k must be non-negative";
  if (t.a != 0 && t.a != 1) return "a must be 0 or 1";
  if (t.k > t.g + 1) return "Harnack bound k <= g+1 violated";
  if (t.a == 0) {
    if (t.k < 1) return "a dividing type needs k >= 1";
    if ((t.g + 1 - t.k) % 2 != 0) return "a dividing type needs k = g+1 (mod 2)";
  } else if (t.k > t.g) {
    return "a non-dividing type needs k <= g";
  }
  return {};
}

bool weichold_valid(const TopologicalType& t) { return weichold_violation(t).empty(); }

std::vector<TopologicalType> enumerate_topological_types(int g) {
  if (g < 0) throw DomainError("genus must be non-negative");
  std::vector<TopologicalType> out;
  for (int a = 0; a <= 1; ++a) {
    for (int k = 0; k <= g + 1; ++k) {
      TopologicalType t{g, k, a};
      if (weichold_valid(t)) out.push_back(t);
    }
  }
  return out;
}

int count_topological_types(int g) {
  if (g < 0) throw DomainError("genus must be non-negative");
  return (3 * g + 4) / 2;
}

CompactSurface quotient_surface(const TopologicalType& t) {
  require_valid(t);
  if (t.a == 0) return CompactSurface{true, (t.g + 1 - t.k) / 2, t.k};
  return CompactSurface{false, t.g + 1 - t.k, t.k};
}

void validate(const CompactSurface& s) {
  if (s.handles_or_crosscaps < 0 || s.boundary < 0) {
    throw DomainError("surface invariants must be non-negative");
  }
  if (!s.orientable && s.handles_or_crosscaps < 1) {
    throw DomainError("a non-orientable surface needs at least one crosscap");
  }
}

TopologicalType double_surface(const CompactSurface& s) {
  validate(s);
  if (s.orientable) {
    if (s.boundary == 0) {
      throw DomainError("disconnected double: closed orientable surface");
    }
    return TopologicalType{2 * s.handles_or_crosscaps + s.boundary - 1, s.boundary, 0};
  }
  // Write s as a sphere with m in {1, 2} crosscaps plus handles; the double
  // has one real circle per boundary circle (the m extra circles are not real).
  const int h = s.handles_or_crosscaps;
  const int m = (h % 2 == 1) ? 1 : 2;
  const int handles = (h - m) / 2;
  return TopologicalType{2 * handles + (s.boundary + m) - 1, s.boundary, 1};
}

int euler_characteristic(const CompactSurface& s) {
  validate(s);
  if (s.orientable) return 2 - 2 * s.handles_or_crosscaps - s.boundary;
  return 2 - s.handles_or_crosscaps - s.boundary;
}

bool is_maximal_curve(const TopologicalType& t) {
  require_valid(t);
  return t.k == t.g + 1;
}

}  // namespace klein::topology
