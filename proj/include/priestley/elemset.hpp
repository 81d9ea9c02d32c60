#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace priestley {

/// Largest universe an ElemSet can index.
inline constexpr std::size_t kMaxElements = 64;

/// A subset of {0..63}, stored as a bitmask.
///
/// ElemSets carry no reference to the poset, lattice or space whose indices
/// they hold; the owning operation validates indices on entry. Ordering
/// compares the raw mask, which is the canonical order for every
/// enumeration in the library.
class ElemSet {
 public:
  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t mask) : mask_(mask) {}
  ElemSet(std::initializer_list<int> members) {
    for (int m : members) insert(m);
  }

  static constexpr ElemSet full(std::size_t n) {
    return ElemSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElemSet single(int i) { return ElemSet(std::uint64_t{1} << i); }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1U; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr void insert(int i) { mask_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { mask_ &= ~(std::uint64_t{1} << i); }
  constexpr bool subsetOf(ElemSet other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr bool intersects(ElemSet other) const { return (mask_ & other.mask_) != 0; }
  /// Lowest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(mask_); }
  /// True when every member is below n.
  constexpr bool fitsIn(std::size_t n) const { return subsetOf(full(n)); }

  constexpr ElemSet operator|(ElemSet o) const { return ElemSet(mask_ | o.mask_); }
  constexpr ElemSet operator&(ElemSet o) const { return ElemSet(mask_ & o.mask_); }
  constexpr ElemSet operator-(ElemSet o) const { return ElemSet(mask_ & ~o.mask_); }
  constexpr ElemSet& operator|=(ElemSet o) { mask_ |= o.mask_; return *this; }
  constexpr ElemSet& operator&=(ElemSet o) { mask_ &= o.mask_; return *this; }
  constexpr ElemSet& operator-=(ElemSet o) { mask_ &= ~o.mask_; return *this; }
  /// Complement relative to {0..n-1}.
  constexpr ElemSet complement(std::size_t n) const { return full(n) - *this; }

  constexpr auto operator<=>(const ElemSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> toVector() const { return {begin(), end()}; }
  /// "{0,2,5}"
  std::string toString() const;

 private:
  std::uint64_t mask_ = 0;
};

}  // namespace priestley
