#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pkit {

/// Fixed-size bitset with a runtime size. Rows of order relations and
/// element sets are all stored this way.
class DynBitset {
public:
  DynBitset() : size_(0) {}
  explicit DynBitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }
  void reset_all() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  DynBitset& operator^=(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  /// this \ o
  DynBitset& subtract(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  DynBitset complement() const {
    DynBitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }

  bool subset_of(const DynBitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const DynBitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  friend bool operator==(const DynBitset& a, const DynBitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator!=(const DynBitset& a, const DynBitset& b) { return !(a == b); }

  /// Strict weak order usable as a deterministic tie-breaker.
  friend bool operator<(const DynBitset& a, const DynBitset& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

  /// First set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + std::countr_zero(w);
      if (++wi == words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  std::size_t hash() const {
    std::size_t h = size_;
    for (auto w : words_) h = h * 1099511628211ull + w;
    return h;
  }

private:
  void trim() {
    if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  std::size_t size_;
  std::vector<std::uint64_t> words_;
};

struct DynBitsetHash {
  std::size_t operator()(const DynBitset& b) const { return b.hash(); }
};

}  // namespace pkit
