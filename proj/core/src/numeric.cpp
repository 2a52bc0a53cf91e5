#include "ttk/numeric.hpp"

#include <algorithm>

namespace ttk {

std::optional<Int> mod_inverse(Int a, Int m) {
  if (m == 1) return Int{0};
  Int old_r = mod_floor(a, m), r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int quotient = old_r / r;
    old_r -= quotient * r;
    std::swap(old_r, r);
    old_s -= quotient * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, m);
}

Int smallest_signed_residue(Int a, Int m) {
  const Int residue = mod_floor(a, m);
  return std::min(residue, m - residue);
}

}  // namespace ttk
