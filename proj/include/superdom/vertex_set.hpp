#pragma once

// Fixed-capacity bit-set over vertex ids. Single 64-bit word when the
// capacity allows, chunked words above that. All set algebra is relative
// to the capacity, so complement() stays inside 0..capacity-1.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace superdom {

class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int capacity) : capacity_(capacity) {
    if (capacity < 0) throw std::invalid_argument("negative capacity");
    words_.assign(word_count(capacity), 0);
  }

  static VertexSet from_mask(int capacity, std::uint64_t mask) {
    VertexSet s(capacity);
    if (capacity < 64 && (mask >> capacity) != 0)
      throw std::invalid_argument("mask exceeds capacity");
    if (capacity > 0) s.words_[0] = mask;
    return s;
  }

  static VertexSet of(int capacity, std::initializer_list<int> vs) {
    VertexSet s(capacity);
    for (int v : vs) s.set(v);
    return s;
  }

  static VertexSet singleton(int capacity, int v) {
    VertexSet s(capacity);
    s.set(v);
    return s;
  }

  static VertexSet full(int capacity) {
    VertexSet s(capacity);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  int capacity() const { return capacity_; }

  bool test(int v) const {
    check_range(v);
    return (words_[v >> 6] >> (v & 63)) & 1;
  }

  void set(int v) {
    check_range(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    check_range(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void clear() { words_.assign(words_.size(), 0); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (std::uint64_t w : words_) if (w) return false;
    return true;
  }

  // Lowest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  // Lowest member strictly greater than `after`, or -1.
  int next(int after) const {
    int v = after + 1;
    if (v >= capacity_) return -1;
    std::size_t i = static_cast<std::size_t>(v) >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
      if (++i >= words_.size()) return -1;
      w = words_[i];
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  std::uint64_t mask64() const {
    if (capacity_ > 64) throw std::logic_error("set capacity exceeds one word");
    return words_.empty() ? 0 : words_[0];
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  VertexSet& operator-=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  bool contains(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (o.words_[i] & ~words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.capacity_ == b.capacity_ && a.words_ == b.words_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

  // Numeric order of the packed words; for equal popcount this is the
  // enumeration order the solvers use ("bit-set-ascending").
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    if (a.capacity_ != b.capacity_) return a.capacity_ < b.capacity_;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

  std::string to_string() const {
    std::string out = "{";
    bool sep = false;
    for (int v = first(); v >= 0; v = next(v)) {
      if (sep) out += ", ";
      out += std::to_string(v);
      sep = true;
    }
    out += "}";
    return out;
  }

 private:
  static std::size_t word_count(int capacity) {
    return static_cast<std::size_t>((capacity + 63) / 64);
  }

  void check_range(int v) const {
    if (v < 0 || v >= capacity_)
      throw std::out_of_range("vertex id " + std::to_string(v) + " outside capacity " +
                              std::to_string(capacity_));
  }

  void check_same(const VertexSet& o) const {
    if (capacity_ != o.capacity_) throw std::invalid_argument("mismatched set capacities");
  }

  void trim() {
    if (words_.empty()) return;
    int tail = capacity_ & 63;
    if (tail) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace superdom
