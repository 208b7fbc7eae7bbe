#pragma once

#include <atomic>
#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gw {

/// Raised when two different values are recorded for the same key. Values are
/// pure functions of their keys, so this always indicates a bug.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Insert-if-absent map shared between threads. Duplicate computation of a
/// key is tolerated; disagreeing values are not.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  /// Returns true when the entry was new.
  bool insert(const Key& key, const Value& value) {
    std::unique_lock lock(mutex_);
    auto [it, fresh] = map_.try_emplace(key, value);
    if (!fresh && it->second != value) throw IntegrityError("memo: conflicting values recorded for one key");
    return fresh;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }

  std::vector<std::pair<Key, Value>> snapshot() const {
    std::shared_lock lock(mutex_);
    return {map_.begin(), map_.end()};
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> map_;
};

struct EvalStats {
  std::atomic<std::size_t> cache_hits{0};
  std::atomic<std::size_t> evaluated{0};  // keys computed by a recursion rule
  std::atomic<std::size_t> max_depth{0};

  void note_depth(std::size_t depth) {
    std::size_t seen = max_depth.load(std::memory_order_relaxed);
    while (depth > seen && !max_depth.compare_exchange_weak(seen, depth, std::memory_order_relaxed)) {
    }
  }
};

}  // namespace gw
