#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

#include <doctest.h>

#include "compact64/floatbits.hpp"
#include "compact64/valueset.hpp"
#include "oracle_decimal.hpp"

using namespace compact64;

TEST_SUITE_BEGIN("valueset");

TEST_CASE("pattern validation") {
  CHECK(DigitPattern("ddd.ddd").free_digits() == 3 + 3);
  CHECK(DigitPattern("ddd.ddd").frac_digits() == 3);
  CHECK(DigitPattern("dddd.").frac_digits() == 0);
  CHECK(DigitPattern(".dddddd").frac_digits() == 6);
  CHECK(DigitPattern("1ddd.ddd").free_digits() == 6);
  CHECK(DigitPattern("dd0000000.").free_digits() == 2);

  CHECK_THROWS_AS(DigitPattern(""), PatternError);
  CHECK_THROWS_AS(DigitPattern("."), PatternError);
  CHECK_THROWS_AS(DigitPattern("d.d.d"), PatternError);
  CHECK_THROWS_AS(DigitPattern("dxd"), PatternError);
  CHECK_THROWS_AS(DigitPattern("dddddddd"), PatternError);       // 8 free digits
  CHECK_THROWS_AS(DigitPattern("dddddddd00000000."), PatternError);  // 16 total

  try {
    DigitPattern("dd?d");
    FAIL("expected PatternError");
  } catch (const PatternError& e) {
    CHECK(e.position() == 2);
    CHECK(e.pattern_text() == "dd?d");
  }
}

TEST_CASE("\"d.\" with negations and NA") {
  const ValueSet set = expand_pattern(DigitPattern("d."));
  // 0..9, their negations (with -0.0 a distinct pattern), and NA.
  CHECK(set.size() == 21);
  for (int i = 0; i <= 9; ++i) {
    CHECK(set.contains_value(static_cast<double>(i)));
    CHECK(set.contains_value(-static_cast<double>(i)));
  }
  CHECK(set.contains(bits_of(-0.0)));
  CHECK(set.contains(kNaBits));
}

TEST_CASE("ddd.ddd expands to a million distinct members") {
  const ValueSet set = expand_pattern(DigitPattern("ddd.ddd"),
                                      {.negations = false, .with_na = false});
  CHECK(set.size() == 1000000);  // no two texts of this form share a double
  CHECK(set.contains_value(0.0));
  CHECK(set.contains_value(999.999));
  CHECK(set.contains(bits_of(123.456)));
}

TEST_CASE("literal-prefix pattern covers 1000.000 through 1999.999") {
  const ValueSet set = expand_pattern(DigitPattern("1ddd.ddd"),
                                      {.negations = false, .with_na = false});
  CHECK(set.size() == 1000000);
  CHECK(set.contains_value(1000.0));
  CHECK(set.contains_value(1999.999));
  CHECK(set.contains_value(1234.567));
  CHECK_FALSE(set.contains_value(999.999));
  CHECK_FALSE(set.contains_value(2000.0));
}

TEST_CASE("leading zeros are enumerated") {
  const ValueSet set = expand_pattern(DigitPattern("ddd.d"),
                                      {.negations = false, .with_na = false});
  CHECK(set.contains(bits_of(std::strtod("012.3", nullptr))));
  CHECK(set.contains_value(0.1));
}

TEST_CASE("conversion matches the host parser and the big-integer oracle") {
  // Samples across every built-in form shape; proves the exact-division
  // construction correctly rounded on the domain this library enumerates.
  const DigitPattern shapes[] = {
      DigitPattern("ddddd.d"), DigitPattern("dd.dddd"),
      DigitPattern(".dddddd"), DigitPattern("dd0000000."),
      DigitPattern(".000000000ddd")};
  for (const auto& shape : shapes) {
    std::vector<std::uint64_t> bits;
    shape.expand_into(bits);
    const std::size_t step = std::max<std::size_t>(1, bits.size() / 997);
    for (std::size_t i = 0; i < bits.size(); i += step) {
      const double v = value_of(bits[i]);
      char buf[64];
      const auto r = std::to_chars(buf, buf + sizeof(buf), v);
      const std::string text(buf, r.ptr);
      REQUIRE(same_bits(v, std::strtod(text.c_str(), nullptr)));
    }
  }
  // Direct text agreement on a full small form.
  for (int a = 0; a <= 9; ++a) {
    for (int b = 0; b <= 9; ++b) {
      std::ostringstream os;
      os << a << b << ".* ";
      for (int c = 0; c <= 99; ++c) {
        char text[16];
        std::snprintf(text, sizeof(text), "%d%d.%02d", a, b, c);
        const double host = std::strtod(text, nullptr);
        const double big = oracle::parse_decimal(text);
        const double lib =
            decimal_value(static_cast<std::uint64_t>(a * 1000 + b * 100 + c),
                          2);
        REQUIRE(same_bits(host, big));
        REQUIRE(same_bits(host, lib));
      }
    }
  }
}

TEST_CASE("members re-render and re-parse to identical patterns") {
  const ValueSet set = builtin_set("C");
  const std::size_t step = std::max<std::size_t>(1, set.size() / 1009);
  for (std::size_t i = 0; i < set.size(); i += step) {
    const double v = value_of(set.members()[i]);
    if (is_na(v)) continue;
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v);
    double back = 0.0;
    std::from_chars(buf, r.ptr, back);
    REQUIRE(same_bits(v, back));
  }
}

TEST_CASE("builtin sets") {
  const ValueSet c = builtin_set("C");
  // dddd. (10^4) plus ddd.ddd (10^6) overlap on the 1000 integers 0..999.
  const std::size_t nonneg = 10000 + 1000000 - 1000;
  CHECK(c.size() == 2 * nonneg + 1);
  CHECK(c.contains(kNaBits));
  CHECK(c.contains_value(123.456));
  CHECK(c.contains_value(-123.456));
  CHECK(c.contains_value(9999.0));

  CHECK(builtin_set("A").size() == 2 * 1000000 + 1);

  CHECK(builtin_row("Z").forms.size() == 16);
  CHECK(builtin_row("X").forms.size() == 15);
  CHECK(builtin_row("W").m == 10);
  CHECK(builtin_row("W").e == 4);
  CHECK(builtin_row("W").f == 1);
  CHECK_THROWS_AS(builtin_row("Q"), Error);
  CHECK_THROWS_AS(builtin_set("bogus"), Error);
}

TEST_CASE("sign closure") {
  const ValueSet set = expand_pattern(DigitPattern("dd.d"),
                                      {.negations = true, .with_na = true});
  for (const std::uint64_t b : set.members()) {
    if (b == kNaBits) continue;
    CHECK(set.contains(b ^ (1ull << 63)));
  }
}

TEST_CASE("members are sorted and deduplicated") {
  const ValueSet set = builtin_set("D");
  const auto members = set.members();
  for (std::size_t i = 1; i < members.size(); ++i)
    REQUIRE(members[i - 1] < members[i]);
}

TEST_CASE("rational grids") {
  const ValueSet zero = expand_rationals({.n_min = 0, .n_max = 0, .q_max = 100});
  CHECK(zero.size() == 2);  // 0.0 and NA; no -0.0 from a symmetric-range grid
  CHECK(zero.contains_value(0.0));
  CHECK_FALSE(zero.contains(bits_of(-0.0)));
  CHECK(zero.contains(kNaBits));

  const ValueSet small =
      expand_rationals({.n_min = -2, .n_max = 2, .q_max = 2});
  const double expected[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  CHECK(small.size() == 7 + 1);
  for (const double v : expected) CHECK(small.contains_value(v));
  CHECK_FALSE(small.contains_value(1.5));  // needs n=3, outside the range

  CHECK_THROWS_AS(expand_rationals({.n_min = 0, .n_max = 1, .q_max = 0}),
                  Error);
}

TEST_CASE("pattern-spec files") {
  std::istringstream in(
      "# integer and milli forms\n"
      "dddd.\n"
      "\n"
      "ddd.ddd\n"
      "m=7\n"
      "negations=1\n"
      "na=1\n");
  const PatternSpec spec = parse_pattern_spec(in);
  CHECK(spec.patterns.size() == 2);
  CHECK(spec.patterns[0].text() == "dddd.");
  CHECK(spec.m == 7);
  CHECK_FALSE(spec.e.has_value());
  CHECK(spec.negations);
  CHECK(spec.with_na);

  std::istringstream in2("e=5\nf=1\nnegations=0\nna=0\ndd.dddd\n");
  const PatternSpec spec2 = parse_pattern_spec(in2);
  CHECK(spec2.e == 5);
  CHECK(spec2.f == 1);
  CHECK_FALSE(spec2.negations);
  CHECK_FALSE(spec2.with_na);

  std::istringstream bad("m=x\n");
  CHECK_THROWS_AS(parse_pattern_spec(bad), Error);
  std::istringstream bad2("q.q\n");
  CHECK_THROWS_AS(parse_pattern_spec(bad2), PatternError);
}

TEST_SUITE_END();
