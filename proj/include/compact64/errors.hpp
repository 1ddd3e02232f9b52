#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace compact64 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid digit-pattern text; position is the offending character's index.
class PatternError : public Error {
 public:
  PatternError(std::string text, std::size_t position, const std::string& why);
  const std::string& pattern_text() const noexcept { return text_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string text_;
  std::size_t position_;
};

// Two set members demand different lower-32 words at the same table index.
class ConflictError : public Error {
 public:
  ConflictError(std::size_t index, std::uint32_t existing,
                std::uint64_t value_bits);
  std::size_t index() const noexcept { return index_; }
  std::uint32_t existing_word() const noexcept { return existing_; }
  std::uint64_t value_bits() const noexcept { return value_bits_; }

 private:
  std::size_t index_;
  std::uint32_t existing_;
  std::uint64_t value_bits_;
};

// A direct table has more than 65536 distinct words, so no 16-bit index
// array can address them.
class TooManyDistinctError : public Error {
 public:
  explicit TooManyDistinctError(std::size_t distinct);
  std::size_t distinct() const noexcept { return distinct_; }

 private:
  std::size_t distinct_;
};

// m+e exceeds the memory cap and the override flag was not given.
class TableTooLargeError : public Error {
 public:
  explicit TableTooLargeError(int index_bits);
  int index_bits() const noexcept { return index_bits_; }

 private:
  int index_bits_;
};

// Malformed table file (bad magic, version, sizes, or out-of-range indices).
class TableFormatError : public Error {
 public:
  using Error::Error;
};

// A vector element is not representable under the requested codec.
class EncodeError : public Error {
 public:
  EncodeError(std::size_t index, std::uint64_t value_bits,
              const std::string& codec);
  std::size_t index() const noexcept { return index_; }
  std::uint64_t value_bits() const noexcept { return value_bits_; }

 private:
  std::size_t index_;
  std::uint64_t value_bits_;
};

}  // namespace compact64
