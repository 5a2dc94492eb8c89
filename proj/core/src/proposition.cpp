#include "doxa/proposition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace doxa {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

void check_same_universe(const Proposition& a, const Proposition& b) {
  if (a.universe_size() != b.universe_size()) {
    throw std::invalid_argument("propositions over different state sets");
  }
}

}  // namespace

Proposition::Proposition(std::size_t universe_size)
    : size_(universe_size), words_(word_count(universe_size), 0) {}

Proposition Proposition::full(std::size_t universe_size) {
  return range(universe_size, 0, universe_size);
}

Proposition Proposition::of(std::size_t universe_size, std::initializer_list<std::size_t> members) {
  Proposition p(universe_size);
  for (auto s : members) p.insert(s);
  return p;
}

Proposition Proposition::from_indices(std::size_t universe_size, std::span<const std::size_t> members) {
  Proposition p(universe_size);
  for (auto s : members) p.insert(s);
  return p;
}

Proposition Proposition::range(std::size_t universe_size, std::size_t lo, std::size_t hi) {
  Proposition p(universe_size);
  for (std::size_t s = lo; s < hi && s < universe_size; ++s) p.insert(s);
  return p;
}

bool Proposition::contains(std::size_t state) const {
  return state < size_ && ((words_[state / 64] >> (state % 64)) & 1u) != 0;
}

void Proposition::insert(std::size_t state) {
  if (state >= size_) throw std::out_of_range("state index outside the state set");
  words_[state / 64] |= std::uint64_t{1} << (state % 64);
}

void Proposition::erase(std::size_t state) {
  if (state >= size_) return;
  words_[state / 64] &= ~(std::uint64_t{1} << (state % 64));
}

bool Proposition::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Proposition::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::optional<std::size_t> Proposition::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<std::size_t> Proposition::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t s) { out.push_back(s); });
  return out;
}

bool Proposition::is_subset_of(const Proposition& other) const {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool Proposition::intersects(const Proposition& other) const {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

Proposition& Proposition::operator&=(const Proposition& other) {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Proposition& Proposition::operator|=(const Proposition& other) {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Proposition& Proposition::operator-=(const Proposition& other) {
  check_same_universe(*this, other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::size_t Proposition::hash() const {
  std::size_t h = size_ * 0x9E3779B97F4A7C15ull;
  for (auto w : words_) {
    h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// Let d be the least element of the symmetric difference, say d in X \ Y.
// Both member lists agree below d; X < Y lexicographically iff Y continues
// past that common prefix, i.e. Y has an element greater than d.
std::strong_ordering operator<=>(const Proposition& a, const Proposition& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  std::size_t d = a.size_;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff != 0) {
      d = w * 64 + static_cast<std::size_t>(std::countr_zero(diff));
      break;
    }
  }
  if (d == a.size_) return std::strong_ordering::equal;
  const bool in_a = a.contains(d);
  const Proposition& other = in_a ? b : a;
  bool other_continues = false;
  for (std::size_t s = d + 1; s < a.size_ && !other_continues; ++s) other_continues = other.contains(s);
  if (in_a) return other_continues ? std::strong_ordering::less : std::strong_ordering::greater;
  return other_continues ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace doxa
