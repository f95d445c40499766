#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace rtd {

// Fixed-universe bitset over vertices [0, universe). Rows of a Graph and
// every vertex subset handed around by the solvers use this type.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<int> members)
      : VertexSet(universe) {
    for (int v : members) insert(v);
  }
  VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  int universe() const { return universe_; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  // Smallest member, or -1.
  int first() const { return next(-1); }
  // Smallest member strictly greater than v, or -1.
  int next(int v) const {
    int start = v + 1;
    if (start >= universe_) return -1;
    std::size_t wi = start >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        f(static_cast<int>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  int count_common(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rtd
