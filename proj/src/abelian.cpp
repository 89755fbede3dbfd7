#include "klein/abelian.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "klein/errors.hpp"

namespace klein::fp {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("integer overflow in Smith normal form");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw DomainError("integer overflow in Smith normal form");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("integer overflow in Smith normal form");
  return out;
}

}  // namespace

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), std::vector<std::int64_t>(p.generator_count(), 0));
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    for (const Letter& l : p.relators()[r]) m[r][l.gen] += l.inverse ? -1 : 1;
  }
  return m;
}

std::vector<std::int64_t> smith_diagonal(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  const std::size_t n = std::min(rows, cols);
  std::vector<std::int64_t> diag(n, 0);

  auto row_op = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t j = 0; j < cols; ++j) m[dst][j] = checked_sub(m[dst][j], checked_mul(q, m[src][j]));
  };
  auto col_op = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t i = 0; i < rows; ++i) m[i][dst] = checked_sub(m[i][dst], checked_mul(q, m[i][src]));
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest non-zero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return diag;  // trailing block is zero
      std::swap(m[t], m[pr]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        row_op(i, t, m[i][t] / m[t][t]);
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        col_op(j, t, m[t][j] / m[t][t]);
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise fold the
      // offending row in and retry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t jj = 0; jj < cols; ++jj) m[t][jj] = checked_add(m[t][jj], m[i][jj]);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag[t] = std::llabs(m[t][t]);
  }
  return diag;
}

AbelianInvariants abelianization_invariants(const Presentation& p) {
  const auto diag = smith_diagonal(relation_matrix(p));
  AbelianInvariants out;
  int rank = 0;
  for (std::int64_t d : diag) {
    if (d != 0) ++rank;
    if (d >= 2) out.torsion.push_back(d);
  }
  out.free_rank = static_cast<int>(p.generator_count()) - rank;
  return out;
}

}  // namespace klein::fp
