#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

namespace mzv {

/// Thread-safe memo table with get-or-insert semantics. Values are immutable
/// once published; two threads racing on the same key may both compute it,
/// and the first insert wins. The table is dropped wholesale once it holds
/// more than `capacity` entries.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class ConcurrentCache {
 public:
  using value_ptr = std::shared_ptr<const Value>;

  explicit ConcurrentCache(std::size_t capacity = 1u << 20) : capacity_(capacity) {}

  value_ptr find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : it->second;
  }

  value_ptr insert(const Key& key, Value value) {
    auto ptr = std::make_shared<const Value>(std::move(value));
    std::unique_lock lock(mutex_);
    if (table_.size() >= capacity_) table_.clear();
    auto [it, inserted] = table_.try_emplace(key, std::move(ptr));
    return it->second;
  }

  template <typename Compute>
  value_ptr get_or_compute(const Key& key, Compute&& compute) {
    if (auto hit = find(key)) return hit;
    return insert(key, compute());
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  std::size_t capacity_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, value_ptr, Hash> table_;
};

/// Hash for an ordered pair of hashable words.
template <typename W>
struct PairHash {
  std::size_t operator()(const std::pair<W, W>& p) const noexcept {
    std::size_t a = std::hash<W>{}(p.first);
    std::size_t b = std::hash<W>{}(p.second);
    return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  }
};

}  // namespace mzv
