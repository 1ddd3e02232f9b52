#include <atomic>
#include <filesystem>
#include <thread>
#include <vector>

#include <doctest.h>

#include "compact64/codec.hpp"
#include "compact64/floatbits.hpp"
#include "compact64/valueset.hpp"

using namespace compact64;
namespace fs = std::filesystem;

TEST_SUITE_BEGIN("codec");

TEST_CASE("builtin handles have the catalogued dimensions") {
  const SchemePtr x = builtin_scheme("X");
  CHECK(x->name() == "X");
  CHECK(x->config() == SchemeConfig{10, 5, 1});
  CHECK(x->stats().table_entries == 32768);
  CHECK(x->stats().distinct_entries == 909);
  CHECK(x->has_indirect());
  CHECK(x->indirect().values.size() == 909);

  const SchemePtr b = builtin_scheme("B");
  CHECK(b->config() == SchemeConfig{5, 0, 0});
  CHECK(b->stats().table_entries == 32);
  CHECK(b->stats().distinct_entries == 26);

  const SchemePtr w = builtin_scheme("W");
  CHECK(w->config() == SchemeConfig{10, 4, 1});

  CHECK(builtin_names().size() == 10);
  CHECK_THROWS_AS(builtin_scheme("nope"), Error);
}

TEST_CASE("encode and decode round simple values") {
  const SchemePtr c = builtin_scheme("C");

  CHECK(c->encode_unchecked(0.5) == 0x3FE00000u);
  CHECK(c->decode(0x3FE00000u) == 0.5);

  const auto w = c->encode_checked(123.456);
  REQUIRE(w.has_value());
  CHECK(*w == 0x405EDD2Fu);
  CHECK(same_bits(c->decode(*w), 123.456));

  const auto neg = c->encode_checked(-123.456);
  REQUIRE(neg.has_value());
  CHECK(same_bits(c->decode(*neg), -123.456));
}

TEST_CASE("the NA word under every builtin") {
  for (const auto name : builtin_names()) {
    const SchemePtr s = builtin_scheme(name);
    const auto w = s->encode_checked(na_value());
    REQUIRE_MESSAGE(w.has_value(), "scheme ", name);
    CHECK(*w == 0x7FFFFFFFu);
    CHECK(is_na(s->decode(*w)));
    if (s->has_indirect()) CHECK(is_na(s->decode_indirect(*w)));
  }
}

TEST_CASE("a seven-digit fraction fails encode under every builtin") {
  for (const auto name : builtin_names()) {
    const SchemePtr s = builtin_scheme(name);
    CHECK_FALSE(s->encode_checked(0.1234567).has_value());
    CHECK_FALSE(s->encode_checked(-0.1234567).has_value());
  }
}

TEST_CASE("encode_checked is exactly bitwise round-trip membership") {
  // Metamorphic identity: encode_checked(v) succeeds iff decode(upper32(v))
  // reproduces v's bits — for members and non-members alike.
  const SchemePtr s = builtin_scheme("D");
  const ValueSet set = builtin_set("D");

  std::size_t hits = 0;
  const std::size_t step = std::max<std::size_t>(1, set.size() / 2003);
  for (std::size_t i = 0; i < set.size(); i += step) {
    const double v = value_of(set.members()[i]);
    const auto w = s->encode_checked(v);
    REQUIRE(w.has_value());
    REQUIRE(same_bits(s->decode(*w), v));
    ++hits;
  }
  CHECK(hits > 1000);

  // Near-members: perturb the low bit so the value leaves the set.
  for (std::size_t i = 0; i < set.size(); i += step * 7) {
    const std::uint64_t bits = set.members()[i] ^ 1ull;
    const double v = value_of(bits);
    const bool member = set.contains(bits);
    CHECK(s->encode_checked(v).has_value() == member);
  }
}

TEST_CASE("decode is total over all words") {
  const SchemePtr a = builtin_scheme("A");
  // Words whose value was never in the design set still decode to something,
  // by construction of the full 2^(m+e) table.
  const double junk = a->decode(0xDEADBEEFu);
  CHECK(upper32(junk) == 0xDEADBEEFu);
}

TEST_CASE("direct and indirect decode agree on every word shape") {
  const SchemePtr x = builtin_scheme("X");
  REQUIRE(x->has_indirect());
  // Sweep all 2^15 table indexes through a fixed positive exponent plane, and
  // spot-check random full words.
  for (std::uint32_t idx = 0; idx < 32768; ++idx) {
    const std::uint32_t w = (idx & 1023u) | (0x400u << 20) | ((idx >> 10) << 21);
    REQUIRE(same_bits(x->decode(w), x->decode_indirect(w)));
    REQUIRE(same_bits(x->decode(w, DecodePath::direct),
                      x->decode(w, DecodePath::indirect)));
  }
  std::uint64_t state = 99;
  for (int i = 0; i < 100000; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    const auto w = static_cast<std::uint32_t>(state >> 32);
    REQUIRE(same_bits(x->decode(w), x->decode_indirect(w)));
  }
}

TEST_CASE("sign symmetry of encode and decode") {
  const SchemePtr z = builtin_scheme("Z");
  const double probes[] = {585.476, 1238.53, 0.000123, 31.8402, 99999.0,
                           0.1234567};
  for (const double v : probes) {
    CHECK(z->encode_checked(v).has_value() ==
          z->encode_checked(-v).has_value());
    CHECK(same_bits(z->decode(upper32(v) ^ 0x80000000u), -z->decode(upper32(v))));
  }
}

TEST_CASE("builtin handles are memoized") {
  const SchemePtr first = builtin_scheme("E");
  const SchemePtr second = builtin_scheme("E");
  CHECK(first.get() == second.get());

  // Concurrent first-use stays safe and converges on one handle.
  std::vector<SchemePtr> seen(8);
  std::vector<std::thread> threads;
  std::atomic<int> go{0};
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&, i] {
      go.fetch_add(1);
      while (go.load() < 8) {}
      seen[i] = builtin_scheme("F");
    });
  for (auto& t : threads) t.join();
  for (int i = 1; i < 8; ++i) CHECK(seen[i].get() == seen[0].get());
}

TEST_CASE("schemes loaded from table files") {
  const fs::path dir = fs::temp_directory_path() / "compact64_codec_tests";
  fs::create_directories(dir);

  const SchemePtr c = builtin_scheme("C");

  SUBCASE("direct file") {
    const fs::path p = dir / "c.cft";
    save_table(p, c->direct());
    const SchemePtr loaded = scheme_from_file(p);
    CHECK(loaded->name() == "file:" + p.string());
    CHECK(loaded->config() == c->config());
    CHECK(loaded->direct().entries == c->direct().entries);
    CHECK_FALSE(loaded->stats().used_entries.has_value());
    CHECK(loaded->stats().distinct_entries == 126);
    CHECK(same_bits(loaded->decode(0x405EDD2Fu), 123.456));
  }

  SUBCASE("indirect file reconstitutes the direct entries") {
    const fs::path p = dir / "c_ind.cft";
    save_table(p, c->indirect());
    const SchemePtr loaded = scheme_from_file(p);
    CHECK(loaded->direct().entries == c->direct().entries);
    REQUIRE(loaded->has_indirect());
    CHECK(loaded->indirect().values == c->indirect().values);
    for (std::uint32_t w : {0x3FE00000u, 0x405EDD2Fu, 0x7FFFFFFFu})
      CHECK(same_bits(loaded->decode(w), loaded->decode_indirect(w)));
  }
}

TEST_CASE("handles without an indirect side say so") {
  // A synthetic table with > 65536 distinct words gets no indirect form.
  DirectTable t;
  t.config = {17, 0, 0};
  t.entries.resize(t.config.table_entries());
  for (std::size_t i = 0; i < 70000; ++i)
    t.entries[i] = static_cast<std::uint32_t>(i + 1);
  const SchemePtr s = SchemeHandle::make("wide", std::move(t));
  CHECK_FALSE(s->has_indirect());
  CHECK_THROWS_AS(s->indirect(), Error);
  CHECK(s->stats().distinct_entries == 70001);
}

TEST_CASE("mismatched direct and indirect halves are rejected") {
  const SchemePtr c = builtin_scheme("C");
  const SchemePtr a = builtin_scheme("A");
  DirectTable direct = c->direct();
  IndirectTable wrong = a->indirect();
  CHECK_THROWS_AS(SchemeHandle::make("bad", std::move(direct),
                                     std::move(wrong)),
                  Error);

  DirectTable direct2 = c->direct();
  IndirectTable tampered = c->indirect();
  tampered.values[0] ^= 0x1u;
  CHECK_THROWS_AS(SchemeHandle::make("bad2", std::move(direct2),
                                     std::move(tampered)),
                  Error);
}

TEST_SUITE_END();
