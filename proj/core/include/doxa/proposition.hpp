#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace doxa {

// A set of states, stored as a bitset over state indices 0..universe_size-1.
// Ordering is lexicographic over the sorted member lists.
class Proposition {
 public:
  Proposition() = default;
  explicit Proposition(std::size_t universe_size);

  static Proposition full(std::size_t universe_size);
  static Proposition of(std::size_t universe_size, std::initializer_list<std::size_t> members);
  static Proposition from_indices(std::size_t universe_size, std::span<const std::size_t> members);
  // Members lo..hi-1.
  static Proposition range(std::size_t universe_size, std::size_t lo, std::size_t hi);

  [[nodiscard]] std::size_t universe_size() const { return size_; }
  [[nodiscard]] bool contains(std::size_t state) const;
  void insert(std::size_t state);
  void erase(std::size_t state);

  [[nodiscard]] bool empty() const;
  [[nodiscard]] std::size_t count() const;
  [[nodiscard]] std::optional<std::size_t> first() const;
  [[nodiscard]] std::vector<std::size_t> members() const;

  [[nodiscard]] bool is_subset_of(const Proposition& other) const;
  [[nodiscard]] bool intersects(const Proposition& other) const;

  Proposition& operator&=(const Proposition& other);
  Proposition& operator|=(const Proposition& other);
  Proposition& operator-=(const Proposition& other);
  friend Proposition operator&(Proposition a, const Proposition& b) { return a &= b; }
  friend Proposition operator|(Proposition a, const Proposition& b) { return a |= b; }
  friend Proposition operator-(Proposition a, const Proposition& b) { return a -= b; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  [[nodiscard]] std::size_t hash() const;

  friend bool operator==(const Proposition& a, const Proposition& b) = default;
  friend std::strong_ordering operator<=>(const Proposition& a, const Proposition& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PropositionHash {
  std::size_t operator()(const Proposition& p) const { return p.hash(); }
};

}  // namespace doxa
