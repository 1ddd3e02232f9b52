#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "compact64/errors.hpp"
#include "compact64/valueset.hpp"

// Table design: given (m, e, f) and a value set, build the 2^(m+e)-entry
// array of lower-mantissa words that reconstructs every member from its
// upper 32 bits alone, or report the conflict that makes it impossible.

namespace compact64 {

struct SchemeConfig {
  int m = 0;  // low-order index bits taken from the 20-bit high-mantissa field
  int e = 0;  // index bits taken from the 11-bit exponent field
  int f = 0;  // offset of those bits from the bottom of the exponent field

  std::size_t table_entries() const noexcept {
    return std::size_t{1} << (m + e);
  }
  bool operator==(const SchemeConfig&) const = default;
};

// Throws Error unless 0 <= m <= 20, 0 <= e, 0 <= f, e + f <= 11.
void validate_config(const SchemeConfig& c);

// Index layout: mantissa bits occupy the low-order index positions, exponent
// bits sit above them (shifted left by m). One extractor shared by every
// decode path in the library.
struct IndexExtractor {
  std::uint32_t mant_mask = 0;
  std::uint32_t exp_shift = 0;
  std::uint32_t exp_mask = 0;
  std::uint32_t mant_bits = 0;

  static IndexExtractor from(const SchemeConfig& c) noexcept {
    return {c.m == 0 ? 0u : (~0u >> (32 - c.m)),
            static_cast<std::uint32_t>(20 + c.f),
            c.e == 0 ? 0u : (~0u >> (32 - c.e)),
            static_cast<std::uint32_t>(c.m)};
  }

  std::size_t operator()(std::uint32_t w) const noexcept {
    return (w & mant_mask) |
           (static_cast<std::size_t>((w >> exp_shift) & exp_mask)
            << mant_bits);
  }
};

std::size_t index_of(std::uint32_t w, const SchemeConfig& c) noexcept;

struct DirectTable {
  SchemeConfig config;
  std::vector<std::uint32_t> entries;  // 2^(m+e); unused slots hold 0
  std::vector<bool> used;              // design-time only; empty when loaded
};

struct IndirectTable {
  SchemeConfig config;
  std::vector<std::uint16_t> index16;  // 2^(m+e)
  std::vector<std::uint32_t> values;   // distinct words, first appearance
};

struct SchemeStats {
  std::size_t table_entries = 0;
  std::optional<std::size_t> used_entries;  // unknown for loaded tables
  std::size_t distinct_entries = 0;         // over the whole array, defaults included
  std::size_t direct_bytes = 0;             // 4 * 2^(m+e)
  std::size_t indirect_bytes = 0;           // 2 * 2^(m+e) + 4 * distinct
};

// Memory cap: tables beyond 2^26 entries (256 MiB direct) need allow_large.
inline constexpr int kMaxIndexBits = 26;

// Conflict-only failure: revisiting an index with the same lower word is
// fine (negations and overlapping forms do it constantly); only a demand for
// a different word at an occupied index is a ConflictError.
DirectTable design_table(const SchemeConfig& c,
                         std::span<const std::uint64_t> members,
                         bool allow_large = false);
DirectTable design_table(const SchemeConfig& c, const ValueSet& set,
                         bool allow_large = false);

SchemeStats stats_of(const DirectTable& t);

IndirectTable build_indirect(const DirectTable& t);  // TooManyDistinctError

// Smallest m in 0..m_max for which design succeeds at this (e, f); nullopt
// if even m_max conflicts. Scans upward: feasibility is monotone in m, since
// adding an index bit only splits index classes and never merges values.
std::optional<SchemeConfig> search_min_m(const ValueSet& set, int e, int f,
                                         int m_max = 20,
                                         bool allow_large = false);

// Table file format "CFT1", little-endian throughout. Header: magic "CFT1",
// version byte = 1, m byte, e byte, f byte, kind byte (0 = direct,
// 1 = indirect). Direct payload: 2^(m+e) 32-bit entries. Indirect payload:
// 32-bit distinct count, 2^(m+e) 16-bit indices, then that many 32-bit
// values. Loaders reject wrong magic/version and range-check every index.
using AnyTable = std::variant<DirectTable, IndirectTable>;

void save_table(const std::filesystem::path& path, const DirectTable& t);
void save_table(const std::filesystem::path& path, const IndirectTable& t);
AnyTable load_table(const std::filesystem::path& path);  // TableFormatError

}  // namespace compact64
