#pragma once

#include <cstdint>
#include <vector>

#include "klein/presentation.hpp"

namespace klein::fp {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;  // entries >= 2, each dividing the next

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Rows are relators, columns generators; entry = exponent sum.
IntMatrix relation_matrix(const Presentation& p);

// Diagonal of the Smith normal form (non-negative, divisibility ordered,
// length min(rows, cols)). Throws DomainError on 64-bit overflow.
std::vector<std::int64_t> smith_diagonal(IntMatrix m);

AbelianInvariants abelianization_invariants(const Presentation& p);

}  // namespace klein::fp
