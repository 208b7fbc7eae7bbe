#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "gw/cache_store.hpp"
#include "gw/tables.hpp"

using namespace gw;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gw_cache_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void read_text(CacheStore& store, const std::string& text) {
  std::istringstream in(text);
  store.read(in);
}

}  // namespace

TEST(CacheRecord, RenderFormat) {
  EXPECT_EQ(render_record(CacheKey{CacheKind::complex, 3, 1, {3, 3}}, 1), "gw1|C|N=3|d=1|c=3,3|v=1");
  EXPECT_EQ(render_record(CacheKey{CacheKind::real, 2, 3, {3, 3, 3}}, -1), "gw1|R|n=2|d=3|c=3,3,3|v=-1");
  EXPECT_EQ(render_record(CacheKey{CacheKind::complex, 2, 0, {}}, 0), "gw1|C|N=2|d=0|c=|v=0");
}

TEST(CacheRecord, ParseRoundTrip) {
  for (const char* line : {"gw1|C|N=3|d=1|c=3,3|v=1", "gw1|R|n=2|d=31|c=3|v=-22138019795038729862257691515501",
                           "gw1|C|N=2|d=0|c=|v=0"}) {
    auto [key, value] = parse_record(line);
    EXPECT_EQ(render_record(key, value), line);
  }
}

TEST(CacheRecord, RejectsMalformedLines) {
  for (const char* line : {"gw2|C|N=3|d=1|c=3,3|v=1", "gw1|X|N=3|d=1|c=3|v=1", "gw1|C|n=3|d=1|c=3|v=1",
                           "gw1|C|N=3|d=1|c=3,,3|v=1", "gw1|C|N=3|d=1|c=5,3|v=1", "gw1|C|N=3|d=1|c=3|v=1x",
                           "gw1|C|N=3|d=1|c=3,|v=1", "gw1|R|n=1|d=1|c=1|v=1", "gw1|C|N=3|d=1|c=3"}) {
    EXPECT_THROW(parse_record(line), CacheError) << line;
  }
}

TEST(CacheStore, LookupAfterInsert) {
  CacheStore store;
  const RealKey key = RealKey::make(2, 1, CodimVector{3});
  EXPECT_FALSE(store.lookup(key).has_value());
  store.insert(CacheKey::of(key), 1);
  ASSERT_TRUE(store.lookup(key).has_value());
  EXPECT_EQ(*store.lookup(key), 1);
  EXPECT_FALSE(store.lookup(ComplexKey::make(2, 1, CodimVector{3})).has_value());
}

TEST(CacheStore, IdempotentInsert) {
  CacheStore store;
  const CacheKey key{CacheKind::complex, 3, 3, {3, 3, 3, 3, 3, 3}};
  EXPECT_TRUE(store.insert(key, 1));
  EXPECT_FALSE(store.insert(key, 1));
  EXPECT_EQ(store.size(), 1u);
}

TEST(CacheStore, ConflictingInsertIsIntegrityError) {
  CacheStore store;
  const CacheKey key{CacheKind::real, 2, 3, {3, 3, 3}};
  store.insert(key, -1);
  EXPECT_THROW(store.insert(key, 1), IntegrityError);
}

TEST(CacheStore, RejectsUnknownVersion) {
  CacheStore store;
  EXPECT_THROW(read_text(store, "#gw-cache v2\n"), CacheError);
  EXPECT_THROW(read_text(store, ""), CacheError);
  EXPECT_THROW(read_text(store, "#gw-cache v1\ngw1|C|N=3|d=1|c=3,3|v=1\nbogus\n"), CacheError);
}

TEST(CacheStore, TenThousandRecordsSurviveSaveLoad) {
  CacheStore store;
  std::mt19937 rng(123);
  while (store.size() < 10000) {
    CacheKey key{rng() % 2 ? CacheKind::complex : CacheKind::real, 2 + static_cast<int>(rng() % 6),
                 1 + static_cast<int>(rng() % 12), {}};
    const int k = static_cast<int>(rng() % 10);
    for (int i = 0; i < k; ++i) key.codims.push_back(1 + static_cast<int>(rng() % 9));
    std::sort(key.codims.begin(), key.codims.end());
    BigInt value = BigInt(rng()) * BigInt(rng()) * BigInt(rng());
    if (rng() % 2) value = -value;
    if (!store.lookup(key)) store.insert(key, value);
  }
  const auto path = temp_file("10k.txt");
  store.save(path.string());
  CacheStore loaded;
  loaded.load(path.string());
  EXPECT_EQ(loaded.size(), store.size());
  std::ostringstream a, b;
  store.write(a);
  loaded.write(b);
  EXPECT_EQ(a.str(), b.str());
  std::filesystem::remove(path);
}

TEST(CacheStore, ResaveIsByteIdentical) {
  RealContext ctx;
  table2_rows(3, ctx);
  CacheStore store;
  store.harvest(ctx.complex(), ctx);
  const auto first = temp_file("first.txt");
  const auto second = temp_file("second.txt");
  store.save(first.string());
  CacheStore reloaded;
  reloaded.load(first.string());
  reloaded.save(second.string());
  EXPECT_EQ(slurp(first), slurp(second));
  EXPECT_EQ(slurp(first).rfind("#gw-cache v1\n", 0), 0u);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
}

TEST(CacheStore, WarmCacheGivesIdenticalResults) {
  RealContext cold;
  const auto cold_table1 = table1_rows(21, Table1Engine::general, cold);
  const auto cold_p5 = table2_rows(3, cold);

  CacheStore store;
  store.harvest(cold.complex(), cold);
  std::ostringstream saved;
  store.write(saved);

  CacheStore loaded;
  read_text(loaded, saved.str());
  RealContext warm;
  loaded.seed(warm.complex(), warm);
  const auto memo_before = warm.memo().size();
  const auto warm_table1 = table1_rows(21, Table1Engine::general, warm);
  const auto warm_p5 = table2_rows(3, warm);
  EXPECT_EQ(warm.memo().size(), memo_before);  // nothing new had to be computed
  ASSERT_EQ(warm_table1.size(), cold_table1.size());
  for (std::size_t i = 0; i < cold_table1.size(); ++i) EXPECT_EQ(warm_table1[i].value(), cold_table1[i].value());
  ASSERT_EQ(warm_p5.size(), cold_p5.size());
  for (std::size_t i = 0; i < cold_p5.size(); ++i) EXPECT_EQ(warm_p5[i].value, cold_p5[i].value);
}

TEST(CacheStore, CorruptedValueSurfacesAsConflict) {
  RealContext ctx;
  table1_rows(9, Table1Engine::general, ctx);
  CacheStore good;
  good.harvest(ctx.complex(), ctx);
  CacheStore tampered;
  tampered.insert(CacheKey{CacheKind::real, 2, 3, {3, 3, 3}}, 7);
  EXPECT_THROW(tampered.harvest(ctx.complex(), ctx), IntegrityError);
}
