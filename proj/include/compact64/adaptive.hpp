#pragma once

#include <cstddef>
#include <vector>

#include "compact64/codec.hpp"

// A numeric vector that stores 32-bit compact words while any registered
// scheme can still decode every element, decaying irreversibly to plain
// doubles the moment none can. Reads go through the "active" candidate —
// the one with the smallest direct table, as a proxy for the fastest,
// cache-resident decoder.

namespace compact64 {

class AdaptiveVector {
 public:
  // Default registry: the ten built-in schemes.
  AdaptiveVector();
  explicit AdaptiveVector(std::vector<SchemePtr> registry);

  void push(double v);
  void set(std::size_t i, double v);  // throws std::out_of_range
  double get(std::size_t i) const;    // throws std::out_of_range

  std::size_t size() const noexcept;
  bool compressed() const noexcept { return compressed_; }

  // Payload bytes only: 4 per element compressed, 8 plain; excludes the
  // shared scheme tables.
  std::size_t payload_bytes() const noexcept;

  std::span<const SchemePtr> candidates() const noexcept {
    return candidates_;
  }
  const SchemePtr& active() const;  // throws Error when plain

 private:
  // Candidates that can also represent v; narrows monotonically.
  std::vector<SchemePtr> surviving(double v) const;
  void decay();  // expand all words via the current active scheme

  std::vector<std::uint32_t> words_;
  std::vector<double> doubles_;
  std::vector<SchemePtr> candidates_;  // sorted by (direct bytes, name)
  bool compressed_ = true;
};

}  // namespace compact64
