#pragma once

#include <cstdint>
#include <optional>

#include "compact64/floatbits.hpp"

// The comparison baseline: 32-bit decimal floating point. A word packs a
// 28-bit two's-complement integer M (bits 4..31) and a 4-bit power-of-ten
// p (bits 0..3); the value is M * 10^-p, decoded by one binary64 division.
// p == 15 is reserved for NA. double(M) is exact (|M| < 2^53) and 10^p is
// exact for p <= 14, so the division is the only rounding.

namespace compact64 {

inline constexpr int kDecNaExponent = 15;
inline constexpr std::int32_t kDecMantissaMin = -(std::int32_t{1} << 27);
inline constexpr std::int32_t kDecMantissaMax = (std::int32_t{1} << 27) - 1;

// Exact binary64 values of 10^0 .. 10^14 (10^14 < 2^53, all exact).
struct PowerTable {
  double pow10[15];
};
extern const PowerTable kPow10;

struct DecParts {
  std::int32_t mantissa = 0;
  int exponent = 0;  // the power-of-ten p
};

constexpr DecParts dec_parts(std::uint32_t word) noexcept {
  return {static_cast<std::int32_t>(word) >> 4,
          static_cast<int>(word & 0xF)};
}

// Range-checked packing; throws Error on out-of-range mantissa/exponent.
std::uint32_t dec_word(std::int32_t mantissa, int exponent);

inline constexpr std::uint32_t kDecNaWord = 15;  // M = 0, p = 15

inline double dec_decode(std::uint32_t word) noexcept {
  const auto [m, p] = dec_parts(word);
  if (p == kDecNaExponent) return na_value();
  return static_cast<double>(m) / kPow10.pow10[p];
}

// Smallest-p canonical encoding, defined as the verified right-inverse of
// dec_decode: scan p = 0..14, take the nearest integer to v * 10^p, accept
// the first candidate that decodes back to v bitwise. NA (bitwise) maps to
// (M=0, p=15). nullopt when no (M, p) reproduces v.
std::optional<std::uint32_t> dec_encode(double v) noexcept;

}  // namespace compact64
