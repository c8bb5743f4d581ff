#pragma once

#include <cstdint>
#include <vector>

#include "hopfgal/exactla/subspace.hpp"

namespace hopfgal {

inline constexpr std::uint64_t default_enumeration_cap = 10'000'000;

/// Calls `visit` once for every subspace of GF(p)^dim, in canonical form.
/// Subspaces come grouped by dimension, then by pivot set, then by the free
/// entries in odometer order. Refuses when p^dim exceeds `cap`.
template <class Visitor>
void for_each_subspace(std::size_t dim, std::uint32_t p, Visitor&& visit, std::uint64_t cap = default_enumeration_cap) {
  PrimeField field(p);
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    size *= p;
    if (size > cap) throw CapExceeded("GF(" + std::to_string(p) + ")^" + std::to_string(dim) + " exceeds the enumeration cap of " + std::to_string(cap));
  }

  for (std::size_t k = 0; k <= dim; ++k) {
    // pivot columns c[0] < ... < c[k-1], advanced like a combination counter
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
      std::vector<bool> is_pivot(dim, false);
      for (auto x : c) is_pivot[x] = true;
      // free slots: (row r, column j) with j > c[r] and j not a pivot
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = c[r] + 1; j < dim; ++j)
          if (!is_pivot[j]) slots.emplace_back(r, j);
      std::vector<std::uint32_t> digits(slots.size(), 0);
      while (true) {
        std::vector<Vector<PrimeField>> rows(k, zero_vector(field, dim));
        for (std::size_t r = 0; r < k; ++r) rows[r][c[r]] = field.one();
        for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = Residue(digits[s], p);
        visit(Subspace<PrimeField>::span(field, dim, rows));

        std::size_t s = 0;
        while (s < digits.size() && ++digits[s] == p) digits[s++] = 0;
        if (s == digits.size()) break;
      }

      // next combination
      std::size_t i = k;
      while (i > 0 && c[i - 1] == dim - k + (i - 1)) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
}

inline std::vector<Subspace<PrimeField>> enumerate_subspaces(std::size_t dim, std::uint32_t p,
                                                             std::uint64_t cap = default_enumeration_cap) {
  std::vector<Subspace<PrimeField>> out;
  for_each_subspace(dim, p, [&](Subspace<PrimeField> s) { out.push_back(std::move(s)); }, cap);
  return out;
}

}  // namespace hopfgal
