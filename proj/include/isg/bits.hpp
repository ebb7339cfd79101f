#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace isg {

// Fixed-width set representations. Bit i of a Coalition is edge i of the
// host graph; bit v of a VertexSet is vertex v. All exact-game machinery
// is guarded to widths where these fit (see the per-operation limits).
using Coalition = std::uint32_t;
using VertexSet = std::uint32_t;

constexpr std::uint32_t bit(int i) { return std::uint32_t{1} << i; }

// Set of all k lowest elements, {0,...,k-1}.
constexpr std::uint32_t full_set(int k) {
  return k >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1;
}

constexpr bool contains(std::uint32_t set, int i) { return (set & bit(i)) != 0; }

constexpr int set_size(std::uint32_t set) { return std::popcount(set); }

constexpr int lowest_element(std::uint32_t set) { return std::countr_zero(set); }

constexpr bool is_subset(std::uint32_t sub, std::uint32_t super) {
  return (sub & ~super) == 0;
}

// Next subset of `space` after `sub` in increasing bit-value order.
// Wraps to 0 after `space` itself; the idiomatic loop is:
//   Coalition s = 0;
//   do { ...; s = next_subset(s, space); } while (s != 0);
constexpr std::uint32_t next_subset(std::uint32_t sub, std::uint32_t space) {
  return (sub - space) & space;
}

inline std::vector<int> set_to_vector(std::uint32_t set) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(set)));
  for (std::uint32_t s = set; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

inline std::uint32_t set_from_vector(const std::vector<int>& elements) {
  std::uint32_t set = 0;
  for (int i : elements) set |= bit(i);
  return set;
}

// "{0,2,5}" — used by reports and error messages.
inline std::string set_to_string(std::uint32_t set) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t s = set; s != 0; s &= s - 1) {
    if (!first) out += ',';
    out += std::to_string(std::countr_zero(s));
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace isg
