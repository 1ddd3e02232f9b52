#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "compact64/errors.hpp"

// Declaration and enumeration of target sets: the finite sets of binary64
// values a scheme must reproduce exactly. Sets come from decimal digit
// patterns ("ddd.ddd"), rational grids (n/q), or explicit lists; they are
// materialized as deduplicated sorted sequences of 64-bit patterns so that
// iteration order is reproducible.

namespace compact64 {

// A fixed-point decimal shape: 'd' marks a free digit position, literal
// digits pin a position, at most one '.'. Examples: "ddd.ddd", "dd0000000.",
// "1ddd.ddd", ".000ddd". Expansion enumerates all 10^(#d) digit assignments
// and converts each text by correctly rounded decimal-to-binary64
// conversion. Leading zeros are legitimate assignments ("012.345").
class DigitPattern {
 public:
  explicit DigitPattern(std::string text);  // throws PatternError

  const std::string& text() const noexcept { return text_; }
  int free_digits() const noexcept { return static_cast<int>(places_.size()); }
  int frac_digits() const noexcept { return frac_; }
  std::uint64_t expansion_size() const noexcept;  // 10^free_digits

  // Appends the bit patterns of all members (nonnegative; no NA, no
  // negations) to out. Duplicates across patterns are the caller's problem.
  void expand_into(std::vector<std::uint64_t>& out) const;

 private:
  std::string text_;
  int frac_ = 0;           // digits right of the '.'
  std::uint64_t base_ = 0; // literal digits' contribution, in 10^-frac units
  std::vector<std::uint64_t> places_;  // scale of each 'd', lowest first
};

// The value of the decimal text with integer significand `digits` and
// `frac_digits` digits after the point, correctly rounded to binary64.
// Exact-operand division double(N)/double(10^k) is correctly rounded by
// IEEE; both operands are exact for digits < 2^53 and frac_digits <= 15,
// which pattern validation guarantees.
double decimal_value(std::uint64_t digits, int frac_digits) noexcept;

struct ExpandOptions {
  bool negations = true;
  bool with_na = true;
};

// Deduplicated, sorted (by unsigned 64-bit pattern) set of binary64 values.
class ValueSet {
 public:
  ValueSet() = default;

  static ValueSet from_bits(std::vector<std::uint64_t> bits,
                            ExpandOptions opts = {.negations = false,
                                                  .with_na = false});

  std::span<const std::uint64_t> members() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool contains(std::uint64_t bits) const noexcept;
  bool contains_value(double v) const noexcept;
  bool includes_na() const noexcept { return include_na_; }
  bool includes_negations() const noexcept { return include_negations_; }

 private:
  std::vector<std::uint64_t> bits_;
  bool include_na_ = false;
  bool include_negations_ = false;
};

ValueSet expand_pattern(const DigitPattern& p, ExpandOptions opts = {});
ValueSet expand_patterns(std::span<const DigitPattern> ps,
                         ExpandOptions opts = {});

// n/q for every n in [n_min, n_max] and q in 1..q_max, each correctly
// rounded. Negations need no separate step: a sign-symmetric n range covers
// them (division is sign-symmetric), and 0/q contributes +0.0 only.
struct RationalGrid {
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  std::int64_t q_max = 1;
};

ValueSet expand_rationals(const RationalGrid& grid, bool with_na = true);

// The ten built-in schemes' catalogued digit forms and configurations.
struct BuiltinRow {
  std::string_view name;  // "A".."F", "W".."Z"
  int m, e, f;
  std::span<const std::string_view> forms;
};

std::span<const BuiltinRow> builtin_rows();
const BuiltinRow& builtin_row(std::string_view name);  // throws Error
ValueSet builtin_set(std::string_view name);  // negations + NA included

// Pattern-spec text file: one pattern per line; blank lines and '#' comments
// ignored; optional directives m=<int>, e=<int>, f=<int>, negations=<0|1>,
// na=<0|1>. Directives default to unset m/e/f and negations=1, na=1.
struct PatternSpec {
  std::vector<DigitPattern> patterns;
  std::optional<int> m, e, f;
  bool negations = true;
  bool with_na = true;
};

PatternSpec parse_pattern_spec(std::istream& in);
PatternSpec load_pattern_spec(const std::filesystem::path& path);

}  // namespace compact64
