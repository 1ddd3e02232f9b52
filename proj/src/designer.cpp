#include "compact64/designer.hpp"

#include <algorithm>

#include "compact64/floatbits.hpp"

namespace compact64 {

void validate_config(const SchemeConfig& c) {
  if (c.m < 0 || c.m > 20)
    throw Error("m = " + std::to_string(c.m) + " out of range 0..20");
  if (c.e < 0 || c.f < 0 || c.e + c.f > 11)
    throw Error("exponent bits e = " + std::to_string(c.e) + ", offset f = " +
                std::to_string(c.f) + " out of range (need e, f >= 0 and e+f <= 11)");
}

std::size_t index_of(std::uint32_t w, const SchemeConfig& c) noexcept {
  return IndexExtractor::from(c)(w);
}

DirectTable design_table(const SchemeConfig& c,
                         std::span<const std::uint64_t> members,
                         bool allow_large) {
  validate_config(c);
  if (c.m + c.e > kMaxIndexBits && !allow_large)
    throw TableTooLargeError(c.m + c.e);
  if (members.empty()) throw Error("cannot design a table for an empty set");

  DirectTable t;
  t.config = c;
  t.entries.assign(c.table_entries(), 0);
  t.used.assign(c.table_entries(), false);
  const IndexExtractor extract = IndexExtractor::from(c);
  for (const std::uint64_t bits : members) {
    const std::uint32_t lo = lower_bits(bits);
    const std::size_t i = extract(upper_bits(bits));
    if (t.used[i]) {
      if (t.entries[i] != lo) throw ConflictError(i, t.entries[i], bits);
    } else {
      t.entries[i] = lo;
      t.used[i] = true;
    }
  }
  return t;
}

DirectTable design_table(const SchemeConfig& c, const ValueSet& set,
                         bool allow_large) {
  return design_table(c, set.members(), allow_large);
}

SchemeStats stats_of(const DirectTable& t) {
  SchemeStats s;
  s.table_entries = t.entries.size();
  if (!t.used.empty())
    s.used_entries = static_cast<std::size_t>(
        std::count(t.used.begin(), t.used.end(), true));
  std::vector<std::uint32_t> sorted(t.entries);
  std::sort(sorted.begin(), sorted.end());
  s.distinct_entries = static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  s.direct_bytes = 4 * s.table_entries;
  s.indirect_bytes = 2 * s.table_entries + 4 * s.distinct_entries;
  return s;
}

IndirectTable build_indirect(const DirectTable& t) {
  IndirectTable it;
  it.config = t.config;
  it.index16.assign(t.entries.size(), 0);

  // First-appearance order scanning index 0 upward, for deterministic
  // serialization. Positions are found via a sorted view to keep the scan
  // O(n log n) over large tables.
  std::vector<std::uint32_t> sorted(t.entries);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() > 65536) throw TooManyDistinctError(sorted.size());

  // rank of each distinct word in sorted order -> position in values
  std::vector<std::uint16_t> position(sorted.size(), 0);
  std::vector<bool> seen(sorted.size(), false);
  it.values.reserve(sorted.size());
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    const std::uint32_t word = t.entries[i];
    const std::size_t rank = static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), word) -
        sorted.begin());
    if (!seen[rank]) {
      seen[rank] = true;
      position[rank] = static_cast<std::uint16_t>(it.values.size());
      it.values.push_back(word);
    }
    it.index16[i] = position[rank];
  }
  return it;
}

std::optional<SchemeConfig> search_min_m(const ValueSet& set, int e, int f,
                                         int m_max, bool allow_large) {
  if (m_max > 20) m_max = 20;
  for (int m = 0; m <= m_max; ++m) {
    const SchemeConfig c{m, e, f};
    try {
      design_table(c, set, allow_large);
      return c;
    } catch (const ConflictError&) {
      // try the next m; the cap error (if the scan grows past it) propagates
    }
  }
  return std::nullopt;
}

}  // namespace compact64
