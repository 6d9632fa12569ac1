#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace lsym {

/// A loop variable x_site^(color). Colors live in Z/nZ and are stored in the
/// canonical residue 1..n; make() performs the reduction.
struct VarId {
  std::uint32_t site = 1;
  std::uint32_t color = 1;

  static VarId make(long site, long raw_color, long n);

  std::uint64_t key() const noexcept {
    return (std::uint64_t{site} << 32) | color;
  }

  std::string to_string() const;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// ((raw - 1) mod n) + 1, valid for negative raw values.
long canonical_color(long raw, long n);

}  // namespace lsym

template <>
struct std::hash<lsym::VarId> {
  std::size_t operator()(const lsym::VarId& v) const noexcept {
    return std::hash<std::uint64_t>{}(v.key());
  }
};
