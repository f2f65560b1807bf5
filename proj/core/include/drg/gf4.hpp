#pragma once

#include <array>
#include <cstdint>

namespace drg {

// GF(4) = {0, 1, w, w^2} encoded as 0..3 with w = 2, w^2 = 3.
// Addition is XOR (characteristic 2); conjugation is the Frobenius x -> x^2.
namespace gf4 {

inline constexpr std::array<std::array<uint8_t, 4>, 4> MUL = {{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};
inline constexpr std::array<uint8_t, 4> CONJ = {0, 1, 3, 2};
inline constexpr std::array<uint8_t, 4> INV = {0, 1, 3, 2};  // INV[0] unused

inline constexpr uint8_t add(uint8_t a, uint8_t b) { return a ^ b; }
inline constexpr uint8_t mul(uint8_t a, uint8_t b) { return MUL[a][b]; }
inline constexpr uint8_t conj(uint8_t a) { return CONJ[a]; }
inline constexpr uint8_t inv(uint8_t a) { return INV[a]; }

// Hermitian form h(u, v) = sum_i u_i conj(v_i).
template <typename It>
inline uint8_t hermitian(It ubegin, It uend, It vbegin) {
  uint8_t acc = 0;
  for (It u = ubegin, v = vbegin; u != uend; ++u, ++v) acc = add(acc, mul(*u, conj(*v)));
  return acc;
}

}  // namespace gf4
}  // namespace drg
