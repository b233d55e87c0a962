#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsmax {

// A subset of the ground set {0, ..., n-1}, stored as a bit vector.
// All element ids are range-checked against the universe size.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int universe_size) : n_(check_size(universe_size)), words_((n_ + 63) / 64, 0) {}

  static Subset empty(int universe_size) { return Subset(universe_size); }

  static Subset full(int universe_size) {
    Subset s(universe_size);
    for (int v = 0; v < universe_size; ++v) s.insert(v);
    return s;
  }

  static Subset of(int universe_size, std::initializer_list<int> elements) {
    Subset s(universe_size);
    for (int v : elements) s.insert(v);
    return s;
  }

  // Builds a subset from the low `universe_size` bits of `mask` (universe_size <= 64).
  static Subset from_mask(int universe_size, std::uint64_t mask) {
    if (universe_size > 64) throw std::invalid_argument("Subset::from_mask: universe size > 64");
    Subset s(universe_size);
    if (universe_size > 0) s.words_[0] = mask & low_bits(universe_size);
    return s;
  }

  int universe_size() const { return n_; }

  int size() const {
    int c = 0;
    for (std::uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool is_empty() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool contains(int v) const {
    check_element(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }

  void insert(int v) {
    check_element(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(int v) {
    check_element(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  Subset with(int v) const {
    Subset s(*this);
    s.insert(v);
    return s;
  }

  Subset without(int v) const {
    Subset s(*this);
    s.erase(v);
    return s;
  }

  bool is_subset_of(const Subset& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  Subset set_union(const Subset& other) const {
    check_same_universe(other);
    Subset s(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] |= other.words_[i];
    return s;
  }

  Subset set_intersection(const Subset& other) const {
    check_same_universe(other);
    Subset s(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] &= other.words_[i];
    return s;
  }

  Subset set_difference(const Subset& other) const {
    check_same_universe(other);
    Subset s(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] &= ~other.words_[i];
    return s;
  }

  Subset complement() const {
    Subset s(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~s.words_[i];
    if (n_ % 64 != 0 && !s.words_.empty()) s.words_.back() &= low_bits(n_ % 64);
    return s;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        out.push_back(static_cast<int>(i) * 64 + b);
        w &= w - 1;
      }
    }
    return out;
  }

  // Bit mask of the subset; only valid for universes of at most 64 elements.
  std::uint64_t mask() const {
    if (n_ > 64) throw std::logic_error("Subset::mask: universe size > 64");
    return words_.empty() ? 0 : words_[0];
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : elements()) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    out += "}";
    return out;
  }

  bool operator==(const Subset& other) const = default;

  friend struct SubsetHash;

 private:
  static int check_size(int n) {
    if (n < 0) throw std::invalid_argument("Subset: negative universe size");
    return n;
  }

  void check_element(int v) const {
    if (v < 0 || v >= n_) {
      throw std::out_of_range("Subset: element id " + std::to_string(v) +
                              " out of range [0, " + std::to_string(n_) + ")");
    }
  }

  void check_same_universe(const Subset& other) const {
    if (n_ != other.n_) throw std::invalid_argument("Subset: mismatched universe sizes");
  }

  static std::uint64_t low_bits(int k) {
    return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : s.words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(s.n_));
  }
};

}  // namespace nsmax
