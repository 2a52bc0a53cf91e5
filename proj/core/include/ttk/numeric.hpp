#pragma once

#include <cstdint>
#include <optional>

namespace ttk {

using Int = std::int64_t;

/// Non-negative residue of a modulo m (m > 0).
constexpr Int mod_floor(Int a, Int m) noexcept {
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Ceiling of a / b for b > 0.
constexpr Int ceil_div(Int a, Int b) noexcept {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

constexpr Int abs_int(Int a) noexcept { return a < 0 ? -a : a; }

/// Inverse of a modulo m, if it exists. m >= 1.
std::optional<Int> mod_inverse(Int a, Int m);

/// Smallest positive integer congruent to +a or -a modulo m. m >= 2 and
/// a coprime to m; returns a value in [1, m/2].
Int smallest_signed_residue(Int a, Int m);

}  // namespace ttk
