#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lrc {

/// Largest ground set a Subset can address.
inline constexpr int kMaxGroundSize = 64;

/// A subset of the ground set {0, ..., n-1}, stored as a 64-bit mask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr Subset single(int i) { return Subset(std::uint64_t{1} << i); }
  static Subset of(std::initializer_list<int> elements);
  static Subset of(std::span<const int> elements);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_proper_subset_of(Subset other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  constexpr Subset with(int i) const { return Subset(bits_ | (std::uint64_t{1} << i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(std::uint64_t{1} << i)); }
  /// Index of the smallest element; the set must be nonempty.
  constexpr int lowest() const { return std::countr_zero(bits_); }
  /// Index one past the largest element (0 for the empty set).
  constexpr int span_end() const { return 64 - std::countl_zero(bits_); }

  std::vector<int> elements() const;
  /// Human-facing rendering, 1-based: {1,3,4}.
  std::string to_string_one_based() const;

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted element lists ({} < {0} < {0,1} < {0,2} < {1}).
bool lex_less(Subset a, Subset b);

using SubsetFamily = std::vector<Subset>;

/// Sorts a family lexicographically and drops duplicates.
void canonicalize(SubsetFamily& family);

/// Calls fn(Subset) for every subset of `of` with exactly `size` elements, in
/// lexicographic order of the element lists. Stops early when fn returns false.
template <typename Fn>
bool for_each_subset_of_size(Subset of, int size, Fn&& fn) {
  const std::vector<int> pool = of.elements();
  const int total = static_cast<int>(pool.size());
  if (size < 0 || size > total) return true;
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    std::uint64_t bits = 0;
    for (int i : pick) bits |= std::uint64_t{1} << pool[i];
    if (!fn(Subset(bits))) return false;
    int i = size - 1;
    while (i >= 0 && pick[i] == total - size + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Calls fn(Subset) for every subset of `of` (including empty and `of` itself).
template <typename Fn>
void for_each_submask(Subset of, Fn&& fn) {
  const std::uint64_t full = of.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(Subset(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace lrc
