#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "compact64/designer.hpp"
#include "compact64/floatbits.hpp"

// Runtime encode/decode between doubles and 32-bit compact words under a
// designed scheme. Encoding is a copy of the upper half; decoding fetches
// the lower half from the table. Both are total over all 2^32 words: every
// word decodes to *some* double, so each scheme's representable set is a
// 2^32-member superset of the set it was designed for.

namespace compact64 {

enum class DecodePath { direct, indirect };

class SchemeHandle {
 public:
  const std::string& name() const noexcept { return name_; }
  const SchemeConfig& config() const noexcept { return direct_.config; }
  const DirectTable& direct() const noexcept { return direct_; }
  bool has_indirect() const noexcept { return indirect_ != nullptr; }
  const IndirectTable& indirect() const;  // throws Error if absent
  const SchemeStats& stats() const noexcept { return stats_; }

  // Caller guarantees v is representable; a bare copy of the upper half.
  std::uint32_t encode_unchecked(double v) const noexcept {
    return upper32(v);
  }

  // Succeeds exactly when decode(upper32(v)) == v bitwise — the definition
  // of membership in the scheme's representable set.
  std::optional<std::uint32_t> encode_checked(double v) const noexcept {
    const std::uint32_t w = upper32(v);
    return direct_.entries[extract_(w)] == lower32(v)
               ? std::optional<std::uint32_t>(w)
               : std::nullopt;
  }

  double decode(std::uint32_t w) const noexcept {
    return recompose(w, direct_.entries[extract_(w)]);
  }

  double decode_indirect(std::uint32_t w) const noexcept {
    return recompose(w, indirect_->values[indirect_->index16[extract_(w)]]);
  }

  double decode(std::uint32_t w, DecodePath path) const noexcept {
    return path == DecodePath::direct ? decode(w) : decode_indirect(w);
  }

  const IndexExtractor& extractor() const noexcept { return extract_; }

  // Builds the indirect table too, unless the direct table's distinct count
  // exceeds the 16-bit limit (then has_indirect() is false).
  static std::shared_ptr<const SchemeHandle> make(std::string name,
                                                  DirectTable table);
  static std::shared_ptr<const SchemeHandle> make(std::string name,
                                                  DirectTable table,
                                                  IndirectTable indirect);

 private:
  SchemeHandle() = default;
  std::string name_;
  DirectTable direct_;
  std::shared_ptr<const IndirectTable> indirect_;
  IndexExtractor extract_;
  SchemeStats stats_;
};

using SchemePtr = std::shared_ptr<const SchemeHandle>;

std::span<const std::string_view> builtin_names();  // A..F, W..Z

// Designs the named built-in at first use and memoizes it (thread-safe,
// at-most-once publication). If COMPACT64_TABLE_CACHE names a directory,
// tables are loaded from / saved to builtin_<name>.cft there; corrupt or
// mismatched cache files are ignored and rewritten.
SchemePtr builtin_scheme(std::string_view name);

// A handle for a table loaded from a CFT1 file ("file:<path>" name).
SchemePtr scheme_from_file(const std::filesystem::path& path);

}  // namespace compact64
