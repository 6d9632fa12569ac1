#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "common/error.hpp"
#include "exact/field.hpp"

namespace lsym {

/// Division-free determinant over a commutative ring: Laplace expansion along
/// rows, memoized on the set of consumed columns (O(2^n * n) products).
template <class T>
T determinant(const std::vector<std::vector<T>>& a) {
  using Tr = FieldTraits<T>;
  const std::size_t n = a.size();
  if (n == 0) return Tr::one();
  require(n <= 24, "determinant too large for cofactor expansion");
  for (const auto& row : a) require(row.size() == n, "determinant of non-square matrix");

  // minors[mask] = det of rows (n - popcount(mask))..n-1 over columns in mask.
  std::unordered_map<std::uint32_t, T> minors;
  minors.emplace(0u, Tr::one());
  std::vector<std::uint32_t> layer{0u};
  for (std::size_t size = 1; size <= n; ++size) {
    const std::size_t row = n - size;
    std::vector<std::uint32_t> next;
    std::unordered_map<std::uint32_t, T> fresh;
    for (auto prev : layer) {
      for (std::size_t c = 0; c < n; ++c) {
        if (prev & (1u << c)) continue;
        const std::uint32_t mask = prev | (1u << c);
        if (fresh.count(mask)) continue;
        T acc = Tr::zero();
        int sign = 1;
        for (std::size_t j = 0; j < n; ++j) {
          if (!(mask & (1u << j))) continue;
          const T& entry = a[row][j];
          if (!Tr::is_zero(entry)) {
            const T& minor = minors.at(mask & ~(1u << j));
            if (!Tr::is_zero(minor)) {
              T prod = entry * minor;
              if (sign > 0)
                acc = acc + prod;
              else
                acc = acc - prod;
            }
          }
          sign = -sign;
        }
        fresh.emplace(mask, std::move(acc));
        next.push_back(mask);
      }
    }
    for (auto& [k, v] : fresh) minors.emplace(k, std::move(v));
    layer = std::move(next);
  }
  return minors.at((n == 32) ? ~0u : ((1u << n) - 1u));
}

}  // namespace lsym
