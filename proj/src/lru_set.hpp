#pragma once

#include <cstddef>
#include <list>
#include <unordered_map>

namespace chordal::detail {

/// Bounded set with least-recently-used eviction. Used as the dead-state memo
/// of the exponential searches.
template <class Key, class Hash = std::hash<Key>>
class LruSet {
 public:
  explicit LruSet(std::size_t capacity) : capacity_(capacity == 0 ? 1 : capacity) {}

  bool contains(const Key& key) {
    auto it = index_.find(key);
    if (it == index_.end()) return false;
    order_.splice(order_.begin(), order_, it->second);
    return true;
  }

  void insert(const Key& key) {
    auto it = index_.find(key);
    if (it != index_.end()) {
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    order_.push_front(key);
    index_.emplace(order_.front(), order_.begin());
    if (index_.size() > capacity_) {
      index_.erase(order_.back());
      order_.pop_back();
      ++evictions_;
    }
  }

  std::size_t size() const { return index_.size(); }
  std::size_t evictions() const { return evictions_; }

 private:
  std::size_t capacity_;
  std::list<Key> order_;
  std::unordered_map<Key, typename std::list<Key>::iterator, Hash> index_;
  std::size_t evictions_ = 0;
};

}  // namespace chordal::detail
