#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isg/bits.hpp"
#include "isg/errors.hpp"

namespace isg {

/// Unordered vertex pair with the normalized orientation u < v.
struct Edge {
  int u = -1;
  int v = -1;

  friend bool operator==(const Edge&, const Edge&) = default;
  bool touches(int w) const { return u == w || v == w; }
  int other(int w) const { return w == u ? v : u; }
};

/// Finite simple undirected graph with a stable edge indexing.
///
/// Vertices are 0..n-1; edge i always refers to the same vertex pair.
/// Isolated vertices are representable here (induced subgraphs need them);
/// game constructors reject them separately. Immutable after construction,
/// so all member queries are safe for concurrent readers.
class Graph {
 public:
  Graph() = default;

  Graph(int vertex_count, std::vector<Edge> edges)
      : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(n_));
    incidence_.resize(static_cast<std::size_t>(n_));
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      Edge& e = edges_[i];
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
      if (e.u == e.v) throw std::invalid_argument("self-loop");
      if (!seen.insert({e.u, e.v}).second)
        throw std::invalid_argument("duplicate edge");
      adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
      adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
      incidence_[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(i));
      incidence_[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(i));
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(int v) const {
    return static_cast<int>(incidence_.at(static_cast<std::size_t>(v)).size());
  }
  /// Sorted ascending.
  const std::vector<int>& neighbors(int v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  /// Edge indices incident to v, ascending.
  const std::vector<int>& incident_edges(int v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }

  bool has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& nbrs = adjacency_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  std::optional<int> edge_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return std::nullopt;
    if (u > v) std::swap(u, v);
    for (int i : incidence_[static_cast<std::size_t>(u)])
      if (edges_[static_cast<std::size_t>(i)].v == v ||
          edges_[static_cast<std::size_t>(i)].u == v)
        return i;
    return std::nullopt;
  }

  // Mask views. These require the graph to fit the fixed set width; every
  // exact-game operation that consumes them has a tighter guard anyway.
  bool fits_masks() const { return n_ <= 32 && edge_count() <= 32; }

  VertexSet adjacency_mask(int v) const {
    require_masks();
    VertexSet mask = 0;
    for (int w : neighbors(v)) mask |= bit(w);
    return mask;
  }

  Coalition incidence_mask(int v) const {
    require_masks();
    Coalition mask = 0;
    for (int i : incident_edges(v)) mask |= bit(i);
    return mask;
  }

  VertexSet all_vertices() const {
    require_masks();
    return full_set(n_);
  }

  Coalition all_edges() const {
    require_masks();
    return full_set(edge_count());
  }

 private:
  void require_masks() const {
    if (!fits_masks())
      throw SizeLimitError("instance too large: bit-set views need at most 32 vertices and 32 edges");
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> incidence_;
};

namespace detail {

inline bool parse_int(std::string_view token, int& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace detail

/// Parses the edge-list format: comment lines start with '#', the first
/// content line is "n m", then exactly m lines "u v". Blank lines are
/// skipped. Each malformed construct raises a ParseError naming its line.
inline Graph parse_graph(std::string_view text) {
  constexpr int kMaxParseSize = 100000;  // sanity bound on n and m
  int n = -1, m = -1;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (n < 0) {
      if (tokens.size() != 2 || !detail::parse_int(tokens[0], n) || !detail::parse_int(tokens[1], m) ||
          n < 0 || m < 0)
        throw ParseError(line_no, "malformed header, expected \"n m\"");
      if (n > kMaxParseSize || m > kMaxParseSize)
        throw ParseError(line_no, "header sizes exceed parser bound");
      continue;
    }
    if (static_cast<int>(edges.size()) == m)
      throw ParseError(line_no, "unexpected content after " + std::to_string(m) + " edges");
    int u = 0, v = 0;
    if (tokens.size() != 2 || !detail::parse_int(tokens[0], u) || !detail::parse_int(tokens[1], v))
      throw ParseError(line_no, "malformed edge line, expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_no, "vertex index out of range [0," + std::to_string(n) + ")");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw ParseError(line_no, "duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
    edges.push_back(Edge{u, v});
  }
  if (n < 0) throw ParseError("missing header line \"n m\"");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("edge list ends early: expected " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

/// Vertices of degree one, ascending.
inline std::vector<int> pendant_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

/// Edge indices with at least one endpoint of degree one, ascending.
inline std::vector<int> pendant_edge_indices(const Graph& g) {
  std::vector<int> out;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (g.degree(e.u) == 1 || g.degree(e.v) == 1) out.push_back(i);
  }
  return out;
}

/// Same set as pendant_edge_indices, as a Coalition.
inline Coalition pendant_edges(const Graph& g) {
  if (g.edge_count() > 32)
    throw SizeLimitError("instance too large: pendant_edges as a coalition needs at most 32 edges");
  Coalition out = 0;
  for (int i : pendant_edge_indices(g)) out |= bit(i);
  return out;
}

inline bool is_pendant_edge(const Graph& g, int edge_index) {
  const Edge& e = g.edge(edge_index);
  return g.degree(e.u) == 1 || g.degree(e.v) == 1;
}

/// Vertices whose incident edges all lie in F. Isolated vertices qualify
/// vacuously; on graphs without them this is the exclusive-vertex set of F.
inline VertexSet exclusive_vertices(const Graph& g, Coalition F) {
  if (!is_subset(F, g.all_edges()))
    throw std::invalid_argument("coalition has bits beyond the edge range");
  VertexSet out = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (is_subset(g.incidence_mask(v), F)) out |= bit(v);
  return out;
}

/// Induced subgraph together with the relabeling back to the host graph:
/// vertex i of `graph` is vertex `vertex_map[i]` of the host.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet U) {
  if (g.vertex_count() > 32)
    throw SizeLimitError("instance too large: vertex-set views need at most 32 vertices");
  if (!is_subset(U, full_set(g.vertex_count())))
    throw std::out_of_range("vertex set has bits beyond the vertex range");
  std::vector<int> map = set_to_vector(U);
  std::vector<int> inverse(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < map.size(); ++i)
    inverse[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (contains(U, e.u) && contains(U, e.v))
      edges.push_back(Edge{inverse[static_cast<std::size_t>(e.u)], inverse[static_cast<std::size_t>(e.v)]});
  return InducedSubgraph{Graph(static_cast<int>(map.size()), std::move(edges)), std::move(map)};
}

/// Edge-induced subgraph G[F]: vertices are the endpoints of F, edges are
/// exactly F. Distinct from inducing on the endpoint set, which would pick
/// up host edges outside F.
inline InducedSubgraph edge_induced_subgraph(const Graph& g, Coalition F) {
  if (!is_subset(F, g.all_edges()))
    throw std::invalid_argument("coalition has bits beyond the edge range");
  VertexSet support = 0;
  for (Coalition s = F; s != 0; s &= s - 1) {
    const Edge& e = g.edge(lowest_element(s));
    support |= bit(e.u) | bit(e.v);
  }
  std::vector<int> map = set_to_vector(support);
  std::vector<int> inverse(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < map.size(); ++i)
    inverse[static_cast<std::size_t>(map[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (Coalition s = F; s != 0; s &= s - 1) {
    const Edge& e = g.edge(lowest_element(s));
    edges.push_back(Edge{inverse[static_cast<std::size_t>(e.u)], inverse[static_cast<std::size_t>(e.v)]});
  }
  return InducedSubgraph{Graph(static_cast<int>(map.size()), std::move(edges)), std::move(map)};
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> visited(static_cast<std::size_t>(g.vertex_count()), false);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> comp;
    std::vector<int> stack{start};
    visited[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!visited[static_cast<std::size_t>(w)]) {
          visited[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// True iff the component U is a star K_{1,k}, k >= 1. K2 counts (either
/// endpoint serves as center). U must be one of components(g).
inline bool is_star(const Graph& g, const std::vector<int>& U) {
  if (U.empty()) throw std::invalid_argument("empty vertex set is not a component");
  std::vector<int> sorted = U;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& comp : components(g)) {
    if (comp.front() != sorted.front()) continue;
    if (comp != sorted) throw std::invalid_argument("vertex set is not a connected component");
    if (U.size() < 2) return false;
    int edge_total = 0;
    int max_degree = 0;
    for (int v : U) {
      edge_total += g.degree(v);
      max_degree = std::max(max_degree, g.degree(v));
    }
    edge_total /= 2;  // both endpoints of every component edge lie in U
    int k = static_cast<int>(U.size()) - 1;
    return edge_total == k && max_degree == k;
  }
  throw std::invalid_argument("vertex set is not a connected component");
}

}  // namespace isg
