#pragma once

#include <bit>
#include <cstdint>

namespace fueter {

// Basis blades of R_{0,n} are bitmasks: bit j (j = 1..n) set iff e_j appears.
// Bit 0 is unused; the empty mask is the scalar unit.
using blade_mask = std::uint32_t;

inline constexpr blade_mask kScalarBlade = 0;

inline constexpr int grade(blade_mask m) { return std::popcount(m); }

struct BladeProduct {
  int sign;  // +1 or -1
  blade_mask mask;
};

// Signed product of basis blades under e_i^2 = -1, e_i e_j = -e_j e_i (i != j).
// Sign = parity of transpositions needed to merge the factor lists, times one
// -1 per annihilated pair; resulting mask is the symmetric difference.
inline constexpr BladeProduct blade_mul(blade_mask a, blade_mask b) {
  int swaps = 0;
  for (blade_mask t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  const int annihilations = std::popcount(a & b);
  const int sign = ((swaps + annihilations) & 1) ? -1 : +1;
  return {sign, a ^ b};
}

// Grade signs of the three involutions.
inline constexpr int main_involution_sign(blade_mask m) { return (grade(m) & 1) ? -1 : +1; }

inline constexpr int reversion_sign(blade_mask m) {
  const int g = grade(m);
  return ((g * (g - 1) / 2) & 1) ? -1 : +1;
}

inline constexpr int conjugation_sign(blade_mask m) {
  return main_involution_sign(m) * reversion_sign(m);
}

}  // namespace fueter
