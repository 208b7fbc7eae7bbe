#pragma once

// Persistent store of evaluated invariants. Text format, one record per line:
//
//   #gw-cache v1
//   gw1|C|N=3|d=1|c=3,3|v=1
//   gw1|R|n=2|d=3|c=3,3,3|v=-1
//
// Codimensions are ascending with repetitions spelled out. Records are saved
// sorted by (kind, N or n, d, codims) so files are reproducible.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gw/complex_engine.hpp"
#include "gw/core.hpp"
#include "gw/memo.hpp"
#include "gw/real_engine.hpp"

namespace gw {

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CacheKind { complex, real };

struct CacheKey {
  CacheKind kind;
  int space;   // N for complex records, n for real ones
  int degree;
  std::vector<int> codims;  // ascending

  static CacheKey of(const ComplexKey& k) { return {CacheKind::complex, k.dim, k.degree, k.insertions.to_list()}; }
  static CacheKey of(const RealKey& k) { return {CacheKind::real, k.n, k.degree, k.insertions.to_list()}; }
  static CacheKey of(const RealMemoKey& k) { return {CacheKind::real, k.n, k.degree, k.insertions.to_list()}; }

  friend bool operator==(const CacheKey&, const CacheKey&) = default;
  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

inline constexpr std::string_view kCacheHeader = "#gw-cache v1";

inline std::string render_record(const CacheKey& key, const BigInt& value) {
  std::string line = "gw1|";
  line += key.kind == CacheKind::complex ? "C|N=" : "R|n=";
  line += std::to_string(key.space);
  line += "|d=" + std::to_string(key.degree) + "|c=";
  for (std::size_t i = 0; i < key.codims.size(); ++i) {
    if (i) line += ',';
    line += std::to_string(key.codims[i]);
  }
  line += "|v=" + to_decimal(value);
  return line;
}

namespace detail {

inline int parse_int_field(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw CacheError("bad " + std::string(what) + " field '" + std::string(text) + "'");
  }
  return value;
}

inline std::string_view expect_prefix(std::string_view field, std::string_view prefix) {
  if (field.substr(0, prefix.size()) != prefix) {
    throw CacheError("expected field '" + std::string(prefix) + "...', got '" + std::string(field) + "'");
  }
  return field.substr(prefix.size());
}

}  // namespace detail

inline std::pair<CacheKey, BigInt> parse_record(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = line.find('|', start);
    fields.push_back(line.substr(start, bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (fields.size() != 6) throw CacheError("expected 6 '|'-separated fields");
  if (fields[0] != "gw1") throw CacheError("unknown record version '" + std::string(fields[0]) + "'");

  CacheKey key{};
  std::string_view space_prefix;
  if (fields[1] == "C") {
    key.kind = CacheKind::complex;
    space_prefix = "N=";
  } else if (fields[1] == "R") {
    key.kind = CacheKind::real;
    space_prefix = "n=";
  } else {
    throw CacheError("unknown record kind '" + std::string(fields[1]) + "'");
  }
  key.space = detail::parse_int_field(detail::expect_prefix(fields[2], space_prefix), "space");
  key.degree = detail::parse_int_field(detail::expect_prefix(fields[3], "d="), "degree");
  std::string_view codims = detail::expect_prefix(fields[4], "c=");
  while (!codims.empty()) {
    std::size_t comma = codims.find(',');
    key.codims.push_back(detail::parse_int_field(codims.substr(0, comma), "codimension"));
    if (comma == std::string_view::npos) break;
    codims.remove_prefix(comma + 1);
    if (codims.empty()) throw CacheError("trailing comma in codimension list");
  }
  for (std::size_t i = 1; i < key.codims.size(); ++i) {
    if (key.codims[i - 1] > key.codims[i]) throw CacheError("codimension list is not ascending");
  }
  if (key.kind == CacheKind::complex && (key.space < 1 || key.degree < 0)) throw CacheError("complex key out of domain");
  if (key.kind == CacheKind::real && (key.space < 2 || key.degree < 1)) throw CacheError("real key out of domain");

  BigInt value;
  try {
    value = parse_decimal(std::string(detail::expect_prefix(fields[5], "v=")));
  } catch (const std::invalid_argument& e) {
    throw CacheError(e.what());
  }
  return {std::move(key), std::move(value)};
}

class CacheStore {
 public:
  std::optional<BigInt> lookup(const CacheKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = records_.find(key);
    if (it == records_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<BigInt> lookup(const ComplexKey& key) const { return lookup(CacheKey::of(key)); }
  std::optional<BigInt> lookup(const RealKey& key) const { return lookup(CacheKey::of(key)); }

  /// Idempotent; a different value for an existing key is an IntegrityError.
  /// Returns true when the record is new.
  bool insert(const CacheKey& key, const BigInt& value) {
    std::unique_lock lock(mutex_);
    auto [it, fresh] = records_.try_emplace(key, value);
    if (!fresh && it->second != value) {
      throw IntegrityError("cache: conflicting value for " + render_record(key, value) + " (stored " +
                           to_decimal(it->second) + ")");
    }
    return fresh;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return records_.size();
  }

  std::size_t count(CacheKind kind) const {
    std::shared_lock lock(mutex_);
    std::size_t n = 0;
    for (const auto& [k, v] : records_) n += k.kind == kind ? 1 : 0;
    return n;
  }

  void write(std::ostream& os) const {
    std::shared_lock lock(mutex_);
    os << kCacheHeader << '\n';
    for (const auto& [k, v] : records_) os << render_record(k, v) << '\n';
  }

  /// Merges the records of a stream into this store.
  void read(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kCacheHeader) {
      throw CacheError("missing or unsupported cache header (expected '" + std::string(kCacheHeader) + "')");
    }
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        auto [key, value] = parse_record(line);
        insert(key, value);
      } catch (const CacheError& e) {
        throw CacheError("cache line " + std::to_string(lineno) + ": " + e.what());
      }
    }
  }

  void save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open cache file for writing: " + path);
    write(out);
    if (!out) throw CacheError("failed writing cache file: " + path);
  }

  void load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot open cache file: " + path);
    read(in);
  }

  /// Copies every stored record into the engines' memo tables.
  void seed(ComplexContext& complex, RealContext& real) const {
    std::shared_lock lock(mutex_);
    for (const auto& [k, v] : records_) {
      CodimVector ins = CodimVector::from_list(k.codims);
      if (k.kind == CacheKind::complex) {
        complex.memo().insert(ComplexKey{k.space, k.degree, std::move(ins)}, v);
      } else {
        real.memo().insert(RealMemoKey{k.space, k.degree, std::move(ins)}, v);
      }
    }
  }

  /// Records every memoized value of the engines; returns how many were new.
  std::size_t harvest(const ComplexContext& complex, const RealContext& real) {
    std::size_t fresh = 0;
    for (const auto& [k, v] : complex.memo().snapshot()) fresh += insert(CacheKey::of(k), v) ? 1 : 0;
    for (const auto& [k, v] : real.memo().snapshot()) fresh += insert(CacheKey::of(k), v) ? 1 : 0;
    return fresh;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<CacheKey, BigInt> records_;
};

}  // namespace gw
