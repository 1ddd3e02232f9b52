#include <array>
#include <cstring>
#include <fstream>

#include "compact64/designer.hpp"

// CFT1 file format, little-endian throughout:
//   "CFT1" | version=1 | m | e | f | kind      (9 header bytes)
//   kind 0 (direct):   2^(m+e) x uint32 entries
//   kind 1 (indirect): uint32 distinct_count, 2^(m+e) x uint16 indices,
//                      distinct_count x uint32 values

namespace compact64 {

namespace {

constexpr char kMagic[4] = {'C', 'F', 'T', '1'};
constexpr std::uint8_t kVersion = 1;

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i)
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::string header_bytes(const SchemeConfig& c, std::uint8_t kind) {
  std::string out(kMagic, 4);
  out.push_back(static_cast<char>(kVersion));
  out.push_back(static_cast<char>(c.m));
  out.push_back(static_cast<char>(c.e));
  out.push_back(static_cast<char>(c.f));
  out.push_back(static_cast<char>(kind));
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed for " + path.string());
}

class Reader {
 public:
  explicit Reader(const std::filesystem::path& path) : path_(path.string()) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TableFormatError("cannot open table file " + path_);
    bytes_.assign(std::istreambuf_iterator<char>(in),
                  std::istreambuf_iterator<char>());
  }

  std::uint8_t u8() {
    if (pos_ + 1 > bytes_.size()) fail("truncated file");
    return static_cast<std::uint8_t>(bytes_[pos_++]);
  }

  std::uint16_t u16() {
    if (pos_ + 2 > bytes_.size()) fail("truncated file");
    const auto b0 = static_cast<std::uint8_t>(bytes_[pos_]);
    const auto b1 = static_cast<std::uint8_t>(bytes_[pos_ + 1]);
    pos_ += 2;
    return static_cast<std::uint16_t>(b0 | (b1 << 8));
  }

  std::uint32_t u32() {
    if (pos_ + 4 > bytes_.size()) fail("truncated file");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(
               static_cast<std::uint8_t>(bytes_[pos_ + i]))
           << (8 * i);
    pos_ += 4;
    return v;
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }

  [[noreturn]] void fail(const std::string& why) const {
    throw TableFormatError("table file " + path_ + ": " + why);
  }

 private:
  std::string path_;
  std::string bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

void save_table(const std::filesystem::path& path, const DirectTable& t) {
  std::string bytes = header_bytes(t.config, 0);
  bytes.reserve(bytes.size() + 4 * t.entries.size());
  for (const std::uint32_t w : t.entries) put_u32(bytes, w);
  write_file(path, bytes);
}

void save_table(const std::filesystem::path& path, const IndirectTable& t) {
  std::string bytes = header_bytes(t.config, 1);
  bytes.reserve(bytes.size() + 4 + 2 * t.index16.size() +
                4 * t.values.size());
  put_u32(bytes, static_cast<std::uint32_t>(t.values.size()));
  for (const std::uint16_t i : t.index16) put_u16(bytes, i);
  for (const std::uint32_t w : t.values) put_u32(bytes, w);
  write_file(path, bytes);
}

AnyTable load_table(const std::filesystem::path& path) {
  Reader r(path);
  char magic[4];
  for (char& ch : magic) ch = static_cast<char>(r.u8());
  if (std::memcmp(magic, kMagic, 4) != 0) r.fail("bad magic");
  if (r.u8() != kVersion) r.fail("unsupported version");
  SchemeConfig c{r.u8(), r.u8(), r.u8()};
  const std::uint8_t kind = r.u8();
  try {
    validate_config(c);
  } catch (const Error& e) {
    r.fail(e.what());
  }
  const std::size_t entries = c.table_entries();

  if (kind == 0) {
    DirectTable t;
    t.config = c;
    t.entries.reserve(entries);
    for (std::size_t i = 0; i < entries; ++i) t.entries.push_back(r.u32());
    if (r.remaining() != 0) r.fail("trailing bytes");
    return t;
  }
  if (kind == 1) {
    IndirectTable t;
    t.config = c;
    const std::uint32_t distinct = r.u32();
    if (distinct == 0 || distinct > 65536) r.fail("bad distinct count");
    t.index16.reserve(entries);
    for (std::size_t i = 0; i < entries; ++i) {
      const std::uint16_t ix = r.u16();
      if (ix >= distinct) r.fail("index out of range of distinct count");
      t.index16.push_back(ix);
    }
    t.values.reserve(distinct);
    for (std::uint32_t i = 0; i < distinct; ++i) t.values.push_back(r.u32());
    if (r.remaining() != 0) r.fail("trailing bytes");
    return t;
  }
  r.fail("unknown kind byte");
}

}  // namespace compact64
