#ifndef AW_SUBSET_HPP
#define AW_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace aw {

// A subset of the points of one space, one bit per point. Capacity is a
// machine word: spaces are capped at 64 points.
struct Subset {
  std::uint64_t bits = 0;

  static Subset empty() { return {}; }
  static Subset single(int i) { return {std::uint64_t{1} << i}; }
  static Subset first_n(int n) {
    return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  bool contains(int i) const { return (bits >> i) & 1u; }
  void add(int i) { bits |= std::uint64_t{1} << i; }
  void remove(int i) { bits &= ~(std::uint64_t{1} << i); }
  bool empty_set() const { return bits == 0; }
  int count() const { return std::popcount(bits); }
  int min_element() const { return std::countr_zero(bits); }

  bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
  bool intersects(Subset o) const { return (bits & o.bits) != 0; }

  friend Subset operator|(Subset a, Subset b) { return {a.bits | b.bits}; }
  friend Subset operator&(Subset a, Subset b) { return {a.bits & b.bits}; }
  friend Subset operator-(Subset a, Subset b) { return {a.bits & ~b.bits}; }
  Subset& operator|=(Subset o) { bits |= o.bits; return *this; }
  Subset& operator&=(Subset o) { bits &= o.bits; return *this; }
  friend bool operator==(Subset a, Subset b) { return a.bits == b.bits; }
  friend bool operator!=(Subset a, Subset b) { return a.bits != b.bits; }
  friend bool operator<(Subset a, Subset b) { return a.bits < b.bits; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }
};

// Iterate set bits without materialising a vector.
template <typename Fn>
inline void for_each_element(Subset s, Fn&& fn) {
  for (std::uint64_t m = s.bits; m; m &= m - 1) fn(std::countr_zero(m));
}

}  // namespace aw

#endif
