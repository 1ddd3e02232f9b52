#include "compact64/codec.hpp"

#include <array>
#include <cstdlib>
#include <mutex>

namespace compact64 {

const IndirectTable& SchemeHandle::indirect() const {
  if (!indirect_)
    throw Error("scheme " + name_ + " has no indirect table");
  return *indirect_;
}

SchemePtr SchemeHandle::make(std::string name, DirectTable table) {
  auto h = std::shared_ptr<SchemeHandle>(new SchemeHandle);
  h->name_ = std::move(name);
  h->extract_ = IndexExtractor::from(table.config);
  h->stats_ = stats_of(table);
  if (h->stats_.distinct_entries <= 65536) {
    h->indirect_ =
        std::make_shared<const IndirectTable>(build_indirect(table));
  }
  table.used.clear();  // design-time only; stats are already taken
  h->direct_ = std::move(table);
  return h;
}

SchemePtr SchemeHandle::make(std::string name, DirectTable table,
                             IndirectTable indirect) {
  if (indirect.config != table.config ||
      indirect.index16.size() != table.entries.size())
    throw Error("indirect table does not match the direct table");
  for (std::size_t i = 0; i < table.entries.size(); ++i)
    if (indirect.values[indirect.index16[i]] != table.entries[i])
      throw Error("indirect table is not faithful to the direct table");
  auto h = std::shared_ptr<SchemeHandle>(new SchemeHandle);
  h->name_ = std::move(name);
  h->extract_ = IndexExtractor::from(table.config);
  h->stats_ = stats_of(table);
  h->indirect_ = std::make_shared<const IndirectTable>(std::move(indirect));
  table.used.clear();
  h->direct_ = std::move(table);
  return h;
}

namespace {

constexpr std::string_view kNames[] = {"A", "B", "C", "D", "E",
                                       "F", "W", "X", "Y", "Z"};

std::optional<std::filesystem::path> cache_dir() {
  const char* dir = std::getenv("COMPACT64_TABLE_CACHE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

SchemePtr design_builtin(const BuiltinRow& row) {
  const SchemeConfig config{row.m, row.e, row.f};
  const auto cache = cache_dir();
  const auto file =
      cache ? *cache / ("builtin_" + std::string(row.name) + ".cft")
            : std::filesystem::path{};

  if (cache) {
    try {
      AnyTable loaded = load_table(file);
      if (auto* direct = std::get_if<DirectTable>(&loaded);
          direct != nullptr && direct->config == config) {
        return SchemeHandle::make(std::string(row.name), std::move(*direct));
      }
      // wrong kind or config: fall through and rewrite
    } catch (const Error&) {
      // missing or corrupt cache entry: fall through and rewrite
    }
  }

  DirectTable table = design_table(config, builtin_set(row.name));
  if (cache) {
    std::error_code ec;
    std::filesystem::create_directories(*cache, ec);
    try {
      save_table(file, table);
    } catch (const Error&) {
      // cache writes are best-effort
    }
  }
  return SchemeHandle::make(std::string(row.name), std::move(table));
}

}  // namespace

std::span<const std::string_view> builtin_names() { return kNames; }

SchemePtr builtin_scheme(std::string_view name) {
  const BuiltinRow& row = builtin_row(name);  // validates the name
  static std::mutex mutex;
  static std::array<SchemePtr, 10> handles;
  const std::size_t slot =
      static_cast<std::size_t>(&row - builtin_rows().data());

  std::scoped_lock lock(mutex);
  if (!handles[slot]) handles[slot] = design_builtin(row);
  return handles[slot];
}

SchemePtr scheme_from_file(const std::filesystem::path& path) {
  AnyTable loaded = load_table(path);
  const std::string name = "file:" + path.string();
  if (auto* direct = std::get_if<DirectTable>(&loaded))
    return SchemeHandle::make(name, std::move(*direct));

  // An indirect file fully determines the direct entries.
  auto& ind = std::get<IndirectTable>(loaded);
  DirectTable direct;
  direct.config = ind.config;
  direct.entries.reserve(ind.index16.size());
  for (const std::uint16_t ix : ind.index16)
    direct.entries.push_back(ind.values[ix]);
  return SchemeHandle::make(name, std::move(direct), std::move(ind));
}

}  // namespace compact64
