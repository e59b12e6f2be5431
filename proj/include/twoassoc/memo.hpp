#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace twoassoc {

/// Lookup-or-compute table shared by the recursive counters. Values are
/// computed outside the lock; a second insertion of the same key keeps the
/// first value, which is harmless because the counters are pure.
template <class Key, class Value>
class ConcurrentMemo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  /// Returns true if the key was new.
  bool insert(const Key& key, const Value& value) {
    std::lock_guard lock(mutex_);
    return table_.try_emplace(key, value).second;
  }

  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    if (auto hit = find(key)) return *hit;
    Value v = compute();
    insert(key, v);
    return v;
  }

  std::vector<std::pair<Key, Value>> snapshot() const {
    std::lock_guard lock(mutex_);
    return {table_.begin(), table_.end()};
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::lock_guard lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace twoassoc
