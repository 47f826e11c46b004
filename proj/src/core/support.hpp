#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/prime_class.hpp"

namespace macias {

// Finite set of prime classes, stored sorted by enumeration index.
class Support {
 public:
  Support(RingId ring, std::vector<PrimeClass> classes)
      : ring_(std::move(ring)), classes_(std::move(classes)) {
    std::sort(classes_.begin(), classes_.end(),
              [](const PrimeClass& a, const PrimeClass& b) { return a.index < b.index; });
    for (size_t i = 0; i + 1 < classes_.size(); ++i)
      if (classes_[i].index == classes_[i + 1].index)
        fail(Errc::Internal, "duplicate prime class in support");
  }

  static Support empty(RingId ring) { return Support(std::move(ring), {}); }

  const RingId& ring() const { return ring_; }
  const std::vector<PrimeClass>& classes() const { return classes_; }
  size_t size() const { return classes_.size(); }
  bool is_empty() const { return classes_.empty(); }

  bool contains(long index) const {
    auto it = std::lower_bound(
        classes_.begin(), classes_.end(), index,
        [](const PrimeClass& c, long v) { return c.index < v; });
    return it != classes_.end() && it->index == index;
  }

  bool disjoint_with(const Support& other) const {
    size_t i = 0, j = 0;
    while (i < classes_.size() && j < other.classes_.size()) {
      if (classes_[i].index == other.classes_[j].index) return false;
      if (classes_[i].index < other.classes_[j].index) ++i; else ++j;
    }
    return true;
  }

  bool subset_of(const Support& other) const {
    size_t j = 0;
    for (const auto& c : classes_) {
      while (j < other.classes_.size() && other.classes_[j].index < c.index) ++j;
      if (j == other.classes_.size() || other.classes_[j].index != c.index) return false;
    }
    return true;
  }

  std::vector<long> indices() const {
    std::vector<long> out;
    out.reserve(classes_.size());
    for (const auto& c : classes_) out.push_back(c.index);
    return out;
  }

  // "{[2],[3]}" style rendering using representative literals.
  std::string str() const {
    std::string out = "{";
    for (size_t i = 0; i < classes_.size(); ++i) {
      if (i) out += ',';
      out += '[' + classes_[i].representative.str() + ']';
    }
    out += '}';
    return out;
  }

  friend bool operator==(const Support& a, const Support& b) {
    if (a.ring_ != b.ring_ || a.classes_.size() != b.classes_.size()) return false;
    for (size_t i = 0; i < a.classes_.size(); ++i)
      if (a.classes_[i].index != b.classes_[i].index) return false;
    return true;
  }

 private:
  RingId ring_;
  std::vector<PrimeClass> classes_;
};

}  // namespace macias
