#include "compact64/valueset.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "compact64/floatbits.hpp"

namespace compact64 {

namespace {

// 10^0 .. 10^15 as exact integers; 10^15 < 2^53 so the double conversions
// below are exact too.
constexpr std::array<std::uint64_t, 16> kPow10Int = [] {
  std::array<std::uint64_t, 16> a{};
  std::uint64_t p = 1;
  for (auto& x : a) {
    x = p;
    p *= 10;
  }
  return a;
}();

// Enumeration guardrails: 10^7 members per pattern at most (the built-in
// catalogue tops out at 10^6), and 15 total digit positions so the
// significand stays under 2^53 and the conversion is provably correct.
constexpr int kMaxFreeDigits = 7;
constexpr int kMaxTotalDigits = 15;

}  // namespace

double decimal_value(std::uint64_t digits, int frac_digits) noexcept {
  return static_cast<double>(digits) /
         static_cast<double>(kPow10Int[frac_digits]);
}

DigitPattern::DigitPattern(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw PatternError(text_, 0, "empty pattern");
  int dot = -1;
  int total_digits = 0;
  for (std::size_t i = 0; i < text_.size(); ++i) {
    const char ch = text_[i];
    if (ch == '.') {
      if (dot >= 0) throw PatternError(text_, i, "second decimal point");
      dot = static_cast<int>(i);
    } else if (ch == 'd' || (ch >= '0' && ch <= '9')) {
      ++total_digits;
    } else {
      throw PatternError(text_, i,
                         "expected 'd', a digit, or a decimal point");
    }
  }
  if (total_digits == 0)
    throw PatternError(text_, 0, "no digit positions");
  if (total_digits > kMaxTotalDigits)
    throw PatternError(text_, 0, "more than 15 digit positions");
  const int len = static_cast<int>(text_.size());
  frac_ = dot < 0 ? 0 : len - dot - 1;

  // Scan significand places from the rightmost digit leftward.
  std::uint64_t place = 1;
  for (int i = len - 1; i >= 0; --i) {
    const char ch = text_[i];
    if (ch == '.') continue;
    if (ch == 'd') {
      places_.push_back(place);
    } else {
      base_ += static_cast<std::uint64_t>(ch - '0') * place;
    }
    place *= 10;
  }
  if (static_cast<int>(places_.size()) > kMaxFreeDigits)
    throw PatternError(text_, 0, "more than 7 free digit positions");
}

std::uint64_t DigitPattern::expansion_size() const noexcept {
  return kPow10Int[places_.size()];
}

void DigitPattern::expand_into(std::vector<std::uint64_t>& out) const {
  const std::uint64_t count = expansion_size();
  out.reserve(out.size() + count);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t n = base_;
    std::uint64_t rest = k;
    for (const std::uint64_t place : places_) {
      n += (rest % 10) * place;
      rest /= 10;
    }
    out.push_back(bits_of(decimal_value(n, frac_)));
  }
}

ValueSet ValueSet::from_bits(std::vector<std::uint64_t> bits,
                             ExpandOptions opts) {
  if (opts.negations) {
    const std::size_t n = bits.size();
    bits.reserve(2 * n + 1);
    for (std::size_t i = 0; i < n; ++i)
      bits.push_back(bits[i] ^ (std::uint64_t{1} << 63));
  }
  if (opts.with_na) bits.push_back(kNaBits);
  std::sort(bits.begin(), bits.end());
  bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
  ValueSet set;
  set.bits_ = std::move(bits);
  set.include_na_ = opts.with_na;
  set.include_negations_ = opts.negations;
  return set;
}

bool ValueSet::contains(std::uint64_t bits) const noexcept {
  return std::binary_search(bits_.begin(), bits_.end(), bits);
}

bool ValueSet::contains_value(double v) const noexcept {
  return contains(bits_of(v));
}

ValueSet expand_pattern(const DigitPattern& p, ExpandOptions opts) {
  std::vector<std::uint64_t> bits;
  p.expand_into(bits);
  return ValueSet::from_bits(std::move(bits), opts);
}

ValueSet expand_patterns(std::span<const DigitPattern> ps,
                         ExpandOptions opts) {
  std::vector<std::uint64_t> bits;
  for (const auto& p : ps) p.expand_into(bits);
  return ValueSet::from_bits(std::move(bits), opts);
}

ValueSet expand_rationals(const RationalGrid& grid, bool with_na) {
  if (grid.q_max < 1) throw Error("rational grid needs q_max >= 1");
  if (grid.n_min > grid.n_max) throw Error("rational grid needs n_min <= n_max");
  std::vector<std::uint64_t> bits;
  bits.reserve(static_cast<std::size_t>(grid.n_max - grid.n_min + 1) *
               static_cast<std::size_t>(grid.q_max));
  for (std::int64_t n = grid.n_min; n <= grid.n_max; ++n) {
    for (std::int64_t q = 1; q <= grid.q_max; ++q) {
      bits.push_back(bits_of(static_cast<double>(n) / static_cast<double>(q)));
    }
  }
  return ValueSet::from_bits(std::move(bits),
                             {.negations = false, .with_na = with_na});
}

namespace {

using sv = std::string_view;

constexpr sv kFormsA[] = {"ddddd.d"};
constexpr sv kFormsB[] = {"dddd.dd"};
constexpr sv kFormsC[] = {"dddd.", "ddd.ddd"};
constexpr sv kFormsD[] = {"ddd.d", "dd.dddd"};
constexpr sv kFormsE[] = {"dd.dd", "d.ddddd"};
constexpr sv kFormsF[] = {"dd.", "d.ddd", ".dddddd"};
constexpr sv kFormsW[] = {"ddddd0.", "ddddd.d", "dddd.dd", "ddd.ddd",
                          "dd.dddd"};
constexpr sv kFormsX[] = {"dd0000000.", "dd000000.",   "dddd000.",
                          "dddddd.",    "ddddd.d",     "dddd.dd",
                          "ddd.ddd",    "dd.dddd",     ".000dd",
                          ".0000dd",    ".00000dd",    ".000000dd",
                          ".0000000dd", ".00000000dd", ".000000000dd"};
constexpr sv kFormsY[] = {"d0000000.",   "dddd000.",     "dddddd.",
                          "ddddd.d",     "dddd.dd",      "ddd.ddd",
                          "dd.dddd",     "d.ddddd",      ".000ddd",
                          ".0000ddd",    ".00000ddd",    ".000000ddd",
                          ".0000000ddd", ".00000000ddd", ".000000000ddd"};
constexpr sv kFormsZ[] = {"dd0000000.",  "ddd00000.",    "dddd000.",
                          "dddddd.",     "ddddd.d",      "dddd.dd",
                          "ddd.ddd",     "dd.dddd",      "d.ddddd",
                          ".dddddd",     ".0000ddd",     ".00000ddd",
                          ".000000ddd",  ".0000000ddd",  ".00000000ddd",
                          ".000000000ddd"};

constexpr BuiltinRow kBuiltinRows[] = {
    {"A", 3, 0, 0, kFormsA},  {"B", 5, 0, 0, kFormsB},
    {"C", 7, 0, 0, kFormsC},  {"D", 10, 0, 0, kFormsD},
    {"E", 12, 0, 0, kFormsE}, {"F", 14, 0, 0, kFormsF},
    {"W", 10, 4, 1, kFormsW}, {"X", 10, 5, 1, kFormsX},
    {"Y", 12, 5, 1, kFormsY}, {"Z", 14, 5, 1, kFormsZ},
};

}  // namespace

std::span<const BuiltinRow> builtin_rows() { return kBuiltinRows; }

const BuiltinRow& builtin_row(std::string_view name) {
  for (const auto& row : kBuiltinRows)
    if (row.name == name) return row;
  throw Error("unknown scheme name \"" + std::string(name) +
              "\" (expected A..F or W..Z)");
}

ValueSet builtin_set(std::string_view name) {
  const BuiltinRow& row = builtin_row(name);
  std::vector<std::uint64_t> bits;
  for (const sv form : row.forms) DigitPattern(std::string(form)).expand_into(bits);
  return ValueSet::from_bits(std::move(bits),
                             {.negations = true, .with_na = true});
}

namespace {

// "key=value" directive; returns value text or nullopt if the key differs.
std::optional<std::string> directive_value(const std::string& line,
                                           std::string_view key) {
  if (line.size() <= key.size() || line.compare(0, key.size(), key) != 0 ||
      line[key.size()] != '=')
    return std::nullopt;
  return line.substr(key.size() + 1);
}

int parse_int(const std::string& text, const std::string& line) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw Error("bad directive value in \"" + line + "\"");
  return value;
}

bool parse_flag(const std::string& text, const std::string& line) {
  if (text == "0") return false;
  if (text == "1") return true;
  throw Error("bad directive value in \"" + line + "\" (expected 0 or 1)");
}

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

PatternSpec parse_pattern_spec(std::istream& in) {
  PatternSpec spec;
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    if (auto v = directive_value(line, "m")) {
      spec.m = parse_int(*v, line);
    } else if (auto v = directive_value(line, "e")) {
      spec.e = parse_int(*v, line);
    } else if (auto v = directive_value(line, "f")) {
      spec.f = parse_int(*v, line);
    } else if (auto v = directive_value(line, "negations")) {
      spec.negations = parse_flag(*v, line);
    } else if (auto v = directive_value(line, "na")) {
      spec.with_na = parse_flag(*v, line);
    } else {
      spec.patterns.emplace_back(line);
    }
  }
  return spec;
}

PatternSpec load_pattern_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open pattern file " + path.string());
  return parse_pattern_spec(in);
}

}  // namespace compact64
