#include "compact64/decfloat.hpp"

#include <cmath>

#include "compact64/errors.hpp"

namespace compact64 {

// Built from exact integer powers (10^14 < 2^53), so every entry is the
// exact binary64 value of its decimal text.
const PowerTable kPow10 = [] {
  PowerTable t{};
  std::uint64_t p = 1;
  for (double& entry : t.pow10) {
    entry = static_cast<double>(p);
    p *= 10;
  }
  return t;
}();

std::uint32_t dec_word(std::int32_t mantissa, int exponent) {
  if (mantissa < kDecMantissaMin || mantissa > kDecMantissaMax)
    throw Error("decimal mantissa " + std::to_string(mantissa) +
                " out of 28-bit range");
  if (exponent < 0 || exponent > 15)
    throw Error("decimal exponent " + std::to_string(exponent) +
                " out of 4-bit range");
  return (static_cast<std::uint32_t>(mantissa) << 4) |
         static_cast<std::uint32_t>(exponent);
}

std::optional<std::uint32_t> dec_encode(double v) noexcept {
  if (is_na(v)) return kDecNaWord;
  const std::uint64_t want = bits_of(v);
  for (int p = 0; p < 15; ++p) {
    const double scaled = v * kPow10.pow10[p];
    // Bounds double as a NaN/infinity rejection (comparisons are false).
    if (!(scaled >= -134217729.0 && scaled <= 134217728.0)) continue;
    const auto m = static_cast<std::int64_t>(std::llrint(scaled));
    if (m < kDecMantissaMin || m > kDecMantissaMax) continue;
    const auto mi = static_cast<std::int32_t>(m);
    if (bits_of(static_cast<double>(mi) / kPow10.pow10[p]) == want)
      return (static_cast<std::uint32_t>(mi) << 4) |
             static_cast<std::uint32_t>(p);
  }
  return std::nullopt;
}

}  // namespace compact64
