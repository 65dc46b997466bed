#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace rough {

/// Largest universe the library can represent. Subsets are single 64-bit
/// characteristic vectors over the universe index.
inline constexpr std::size_t kMaxUniverse = 64;

/// A subset of a finite universe, stored as a characteristic vector.
/// Bit i is set iff the element with index i belongs to the set. The
/// universe size is not stored; operations needing it (complement, full
/// set) take it explicitly.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  Subset(std::initializer_list<std::size_t> indices) {
    for (auto i : indices) insert(i);
  }

  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr Subset singleton(std::size_t i) {
    return Subset(std::uint64_t{1} << i);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  /// Complement relative to a universe of `n` elements.
  constexpr Subset complement(std::size_t n) const { return Subset(~bits_ & full(n).bits_); }

  /// Smallest index in the set; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> indices() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical subset order: by cardinality, then lexicographically on the
/// ascending index sequence.
constexpr bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  const Subset diff(a.bits() ^ b.bits());
  return a.contains(diff.first());
}

struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

/// Calls `f(Subset)` for every subset of `base` (including empty and `base`),
/// in increasing order of the underlying bit pattern.
template <class F>
void for_each_subset(Subset base, F&& f) {
  std::uint64_t sub = 0;
  const std::uint64_t mask = base.bits();
  while (true) {
    f(Subset(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace rough
