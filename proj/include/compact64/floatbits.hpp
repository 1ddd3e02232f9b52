#pragma once

#include <bit>
#include <cstdint>

// Bit-level decomposition of IEEE binary64 values: 1 sign bit, 11 exponent
// bits, 52 mantissa bits. The upper 32 bits (sign, exponent, 20 high mantissa
// bits) are the "compact word" every codec in this library stores; the lower
// 32 mantissa bits are what the lookup tables reconstruct.
//
// All value comparisons in this library are bitwise pattern comparisons,
// never numeric ==: NaN != NaN and -0.0 == 0.0 numerically, either of which
// would corrupt round-trip checks.

namespace compact64 {

// The missing-value sentinel: a NaN whose upper 20 mantissa bits are all ones
// and whose lower 32 mantissa bits hold the integer 1954. Sign bit 0, so
// upper32(na) == 0x7FFFFFFF. Distinguishable by payload from the quiet NaN
// that 0.0/0.0 produces.
inline constexpr std::uint64_t kNaBits =
    (0x7FFull << 52) | (0xFFFFFull << 32) | 1954ull;

[[nodiscard]] inline std::uint64_t bits_of(double v) noexcept {
  return std::bit_cast<std::uint64_t>(v);
}

[[nodiscard]] inline double value_of(std::uint64_t bits) noexcept {
  return std::bit_cast<double>(bits);
}
double value_of(double) = delete;  // would silently round-trip through int

[[nodiscard]] inline std::uint32_t upper32(double v) noexcept {
  return static_cast<std::uint32_t>(bits_of(v) >> 32);
}

[[nodiscard]] inline std::uint32_t lower32(double v) noexcept {
  return static_cast<std::uint32_t>(bits_of(v));
}

[[nodiscard]] inline std::uint32_t upper_bits(std::uint64_t bits) noexcept {
  return static_cast<std::uint32_t>(bits >> 32);
}

[[nodiscard]] inline std::uint32_t lower_bits(std::uint64_t bits) noexcept {
  return static_cast<std::uint32_t>(bits);
}

[[nodiscard]] inline double recompose(std::uint32_t hi,
                                      std::uint32_t lo) noexcept {
  return value_of((static_cast<std::uint64_t>(hi) << 32) | lo);
}

[[nodiscard]] inline double na_value() noexcept { return value_of(kNaBits); }

[[nodiscard]] inline bool is_na(double v) noexcept {
  return bits_of(v) == kNaBits;
}

[[nodiscard]] inline bool same_bits(double a, double b) noexcept {
  return bits_of(a) == bits_of(b);
}

}  // namespace compact64
