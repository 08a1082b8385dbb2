#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace polyspace {

// A subset of {0..n-1} packed into one machine word. Indices are 0-based
// everywhere inside the library; the format layer shifts to 1-based for I/O.
struct Subset {
  std::uint64_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t b) : bits(b) {}

  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~0ull : ((1ull << n) - 1));
  }
  static constexpr Subset single(int i) { return Subset(1ull << i); }

  constexpr int count() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(int i) const { return (bits >> i) & 1; }
  constexpr bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
  constexpr bool intersects(Subset o) const { return (bits & o.bits) != 0; }
  constexpr int min_index() const { return std::countr_zero(bits); }

  constexpr Subset with(int i) const { return Subset(bits | (1ull << i)); }
  constexpr Subset without(int i) const { return Subset(bits & ~(1ull << i)); }
  constexpr Subset complement_in(int n) const {
    return Subset(full(n).bits & ~bits);
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits | b.bits);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits & b.bits);
  }
  friend constexpr Subset operator^(Subset a, Subset b) {
    return Subset(a.bits ^ b.bits);
  }

  auto operator<=>(const Subset&) const = default;
};

// Range over the set bit positions, lowest first:
//   for (int i : bit_indices(s)) ...
class bit_indices {
 public:
  constexpr explicit bit_indices(Subset s) : bits_(s.bits) {}
  constexpr explicit bit_indices(std::uint64_t b) : bits_(b) {}

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t b) : bits_(b) {}
    constexpr int operator*() const { return std::countr_zero(bits_); }
    constexpr iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const {
      return bits_ != o.bits_;
    }

   private:
    std::uint64_t bits_;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_;
};

}  // namespace polyspace
