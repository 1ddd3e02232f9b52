#include <cmath>
#include <cstdint>
#include <string>

#include <doctest.h>

#include "compact64/bench.hpp"
#include "compact64/decfloat.hpp"
#include "compact64/floatbits.hpp"
#include "oracle_decimal.hpp"

using namespace compact64;

TEST_SUITE_BEGIN("decfloat");

TEST_CASE("power table is exact") {
  std::uint64_t ten_k = 1;
  for (int k = 0; k <= 14; ++k) {
    CHECK(kPow10.pow10[k] == static_cast<double>(ten_k));
    CHECK(kPow10.pow10[k] == oracle::decimal_to_double(ten_k, 0));
    ten_k *= 10;
  }
  CHECK(kPow10.pow10[14] == 1e14);
  CHECK(kPow10.pow10[14] < 9007199254740992.0);  // 2^53: still exact
}

TEST_CASE("word packing round-trips") {
  const std::uint32_t w = dec_word(123456, 3);
  const auto [m, p] = dec_parts(w);
  CHECK(m == 123456);
  CHECK(p == 3);

  const auto [mn, pn] = dec_parts(dec_word(-123456, 3));
  CHECK(mn == -123456);
  CHECK(pn == 3);

  CHECK(dec_parts(dec_word(kDecMantissaMin, 0)).mantissa == kDecMantissaMin);
  CHECK(dec_parts(dec_word(kDecMantissaMax, 14)).mantissa == kDecMantissaMax);

  CHECK_THROWS_AS(dec_word(kDecMantissaMax + 1, 0), Error);
  CHECK_THROWS_AS(dec_word(kDecMantissaMin - 1, 0), Error);
  CHECK_THROWS_AS(dec_word(0, 16), Error);
  CHECK_THROWS_AS(dec_word(0, -1), Error);
}

TEST_CASE("decoding") {
  CHECK(dec_decode(dec_word(0, 0)) == 0.0);
  CHECK(same_bits(dec_decode(dec_word(0, 0)), 0.0));  // +0.0, not -0.0

  const double d = dec_decode(dec_word(123456, 3));
  CHECK(same_bits(d, 123.456));
  CHECK(same_bits(d, oracle::parse_decimal("123.456")));
  CHECK(same_bits(dec_decode(dec_word(-123456, 3)),
                  oracle::parse_decimal("-123.456")));

  CHECK(is_na(dec_decode(kDecNaWord)));
  CHECK(is_na(dec_decode((123456 << 4) | 15)));  // any M with p = 15
  CHECK(is_na(dec_decode(0xFFFFFFFFu)));         // M = -1, p = 15 is still NA

  // Agreement with the big-integer oracle across magnitudes and exponents.
  std::uint64_t state = 7;
  for (int i = 0; i < 20000; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    const auto m = static_cast<std::int32_t>((state >> 37) &
                                             ((1u << 27) - 1)) -
                   (1 << 26);  // spread over +/- 2^26
    const int p = static_cast<int>((state >> 8) % 15);
    const double mag =
        oracle::decimal_to_double(static_cast<std::uint64_t>(std::abs(
                                      static_cast<std::int64_t>(m))),
                                  p);
    const double expect = m < 0 ? -mag : mag;
    REQUIRE(same_bits(dec_decode(dec_word(m, p)), expect));
  }
}

TEST_CASE("encoding picks the smallest exponent") {
  auto parts_of = [](double v) {
    const auto w = dec_encode(v);
    REQUIRE(w.has_value());
    return dec_parts(*w);
  };

  CHECK(parts_of(123.456).mantissa == 123456);
  CHECK(parts_of(123.456).exponent == 3);
  CHECK(parts_of(-123.456).mantissa == -123456);

  // 100.0 is representable as (100, 0), (1000, 1), ...; canonical is p = 0.
  CHECK(parts_of(100.0).mantissa == 100);
  CHECK(parts_of(100.0).exponent == 0);

  CHECK(parts_of(0.0).mantissa == 0);
  CHECK(parts_of(0.0).exponent == 0);

  CHECK(dec_encode(na_value()) == kDecNaWord);
}

TEST_CASE("encoding rejects what decoding cannot reach") {
  // 13 significant digits: needs M ~ 1.23e12 >> 2^27.
  CHECK_FALSE(dec_encode(0.1234567890123).has_value());
  // Representable neighborhood boundary: 2^27 - 1 fits, 2^27 does not at p=0
  // but does at no p (134217728 * 10^-p never hits it exactly... it does at
  // p = 0? M max is 2^27 - 1 = 134217727). 134217728.0 has no encoding.
  CHECK(dec_encode(134217727.0).has_value());
  CHECK_FALSE(dec_encode(134217728.0).has_value());
  CHECK(dec_encode(-134217728.0).has_value());   // kDecMantissaMin at p = 0
  CHECK_FALSE(dec_encode(-134217729.0).has_value());

  CHECK_FALSE(dec_encode(1e300).has_value());
  CHECK_FALSE(dec_encode(-1e300).has_value());
  CHECK_FALSE(dec_encode(std::numeric_limits<double>::infinity()).has_value());
  CHECK_FALSE(dec_encode(-std::numeric_limits<double>::infinity()).has_value());
  CHECK_FALSE(dec_encode(std::nan("")).has_value());  // plain NaN is not NA

  // -0.0 is unreachable: M = 0 decodes to +0.0 at every p.
  CHECK_FALSE(dec_encode(-0.0).has_value());
  CHECK(dec_encode(0.0).has_value());

  // Tiny values below 10^-14 resolution.
  CHECK_FALSE(dec_encode(1e-20).has_value());
  CHECK_FALSE(dec_encode(5e-324).has_value());  // subnormal
}

TEST_CASE("encode is a verified right inverse of decode") {
  // For every encodable v: decode(encode(v)) == v bitwise. Sweep random
  // words; their decoded values must re-encode to a word that decodes back.
  std::uint64_t state = 12345;
  std::size_t encodable = 0;
  for (int i = 0; i < 200000; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    const auto w = static_cast<std::uint32_t>(state >> 32);
    const double v = dec_decode(w);
    const auto back = dec_encode(v);
    REQUIRE(back.has_value());  // v came from a word, so it is reachable
    REQUIRE(same_bits(dec_decode(*back), v));
    // Canonical: no smaller exponent reproduces v.
    const auto [m, p] = dec_parts(*back);
    if (!is_na(v)) {
      for (int q = 0; q < p; ++q) {
        const double scaled = v * kPow10.pow10[q];
        const auto cand = static_cast<std::int64_t>(std::llrint(scaled));
        if (cand >= kDecMantissaMin && cand <= kDecMantissaMax) {
          REQUIRE_FALSE(same_bits(
              dec_decode(dec_word(static_cast<std::int32_t>(cand), q)), v));
        }
      }
    }
    ++encodable;
  }
  CHECK(encodable == 200000);
}

TEST_CASE("generated benchmark data is always encodable") {
  // Both element distributions produce six-digit decimals with <= 4
  // fractional digits: |M| <= 999999·10 < 2^27 in every case.
  for (const int dist : {1, 2}) {
    const auto data = gen_data(dist, 5000, /*seed=*/2026);
    for (const double v : data) {
      const auto w = dec_encode(v);
      REQUIRE(w.has_value());
      REQUIRE(same_bits(dec_decode(*w), v));
    }
  }
}

TEST_SUITE_END();
