#include "exact/var.hpp"

#include "common/error.hpp"

namespace lsym {

long canonical_color(long raw, long n) {
  require(n >= 1, "number of colors must be positive");
  long r = (raw - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

VarId VarId::make(long site, long raw_color, long n) {
  require(site >= 1, "variable site must be >= 1");
  return VarId{static_cast<std::uint32_t>(site),
               static_cast<std::uint32_t>(canonical_color(raw_color, n))};
}

std::string VarId::to_string() const {
  return "x[" + std::to_string(site) + "]^(" + std::to_string(color) + ")";
}

}  // namespace lsym
