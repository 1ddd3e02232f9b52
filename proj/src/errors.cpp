#include "compact64/errors.hpp"

#include <sstream>

namespace compact64 {

namespace {

std::string pattern_message(const std::string& text, std::size_t pos,
                            const std::string& why) {
  std::ostringstream os;
  os << "invalid pattern \"" << text << "\" at position " << pos << ": "
     << why;
  return os.str();
}

std::string conflict_message(std::size_t index, std::uint32_t existing,
                             std::uint64_t value_bits) {
  std::ostringstream os;
  os << "design conflict at index " << index << ": entry 0x" << std::hex
     << existing << " already placed, value 0x" << value_bits
     << " demands lower word 0x"
     << static_cast<std::uint32_t>(value_bits & 0xFFFFFFFFu);
  return os.str();
}

}  // namespace

PatternError::PatternError(std::string text, std::size_t position,
                           const std::string& why)
    : Error(pattern_message(text, position, why)),
      text_(std::move(text)),
      position_(position) {}

ConflictError::ConflictError(std::size_t index, std::uint32_t existing,
                             std::uint64_t value_bits)
    : Error(conflict_message(index, existing, value_bits)),
      index_(index),
      existing_(existing),
      value_bits_(value_bits) {}

TooManyDistinctError::TooManyDistinctError(std::size_t distinct)
    : Error("table has " + std::to_string(distinct) +
            " distinct words; 16-bit indices address at most 65536"),
      distinct_(distinct) {}

TableTooLargeError::TableTooLargeError(int index_bits)
    : Error("m+e = " + std::to_string(index_bits) +
            " exceeds the cap of 26 index bits (256 MiB direct table); "
            "pass the large-table override to proceed"),
      index_bits_(index_bits) {}

EncodeError::EncodeError(std::size_t index, std::uint64_t value_bits,
                         const std::string& codec)
    : Error("element " + std::to_string(index) + " (bits 0x" +
            [](std::uint64_t b) {
              std::ostringstream os;
              os << std::hex << b;
              return os.str();
            }(value_bits) +
            ") is not representable under " + codec),
      index_(index),
      value_bits_(value_bits) {}

}  // namespace compact64
