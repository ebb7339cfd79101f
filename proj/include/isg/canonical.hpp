#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "isg/errors.hpp"
#include "isg/graph.hpp"

namespace isg {

inline constexpr int kMaxCanonicalVertices = 8;

/// Canonical adjacency encoding: the lexicographically minimal
/// upper-triangle bit string of the adjacency matrix over all vertex
/// permutations. Pair (0,1) is the most significant bit, so integer order
/// on `adjacency_bits` matches lexicographic order on the bit string.
/// Two graphs on the same vertex count are isomorphic iff their keys match.
struct CanonKey {
  int vertices = 0;
  std::uint64_t adjacency_bits = 0;

  friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

namespace detail {

// Rank of pair (u,v), u < v, in lexicographic order over all pairs of 0..n-1.
inline int pair_rank(int n, int u, int v) {
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline std::uint64_t pair_bit(int n, int rank) {
  int total = n * (n - 1) / 2;
  return std::uint64_t{1} << (total - 1 - rank);
}

}  // namespace detail

inline CanonKey canonical_form(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxCanonicalVertices)
    throw SizeLimitError("instance too large: canonical form is limited to 8 vertices");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    for (const Edge& e : g.edges()) {
      int a = perm[static_cast<std::size_t>(e.u)];
      int b = perm[static_cast<std::size_t>(e.v)];
      if (a > b) std::swap(a, b);
      key |= detail::pair_bit(n, detail::pair_rank(n, a, b));
    }
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (g.edge_count() == 0) best = 0;
  return CanonKey{n, best};
}

/// Decodes a key back into its representative graph. Edges come out in
/// lexicographic pair order, which fixes the representative's edge indexing.
inline Graph graph_from_key(const CanonKey& key) {
  const int n = key.vertices;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (key.adjacency_bits & detail::pair_bit(n, detail::pair_rank(n, u, v)))
        edges.push_back(Edge{u, v});
  return Graph(n, std::move(edges));
}

}  // namespace isg
