#pragma once

/**
 * Immutable simple undirected graph over dense vertex indices 0..n-1.
 *
 * Each vertex owns a bit-mask row holding its open neighborhood. Rows are
 * symmetric and loop-free; every constructor in this library goes through
 * Graph::from_edge_list so those invariants hold for every Graph value.
 */

#include "totdom/error.hpp"
#include "totdom/vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace totdom {

/// Unordered vertex pair. Canonical form has first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge canonical() const { return first < second ? *this : Edge{second, first}; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

class Graph {
public:
  /// The empty graph (no vertices).
  Graph() = default;

  /// Builds a graph from unordered pairs. Duplicates collapse; loops and
  /// out-of-range endpoints throw GraphError.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.rows_.assign(n, VertexSet(n));
    for (const auto& e : edges) {
      if (e.first >= n || e.second >= n)
        throw GraphError("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                         ") has an endpoint outside 0.." +
                         (n == 0 ? std::string("(empty)") : std::to_string(n - 1)));
      if (e.first == e.second)
        throw GraphError("self-loop at vertex " + std::to_string(e.first));
      g.rows_[e.first].insert(e.second);
      g.rows_[e.second].insert(e.first);
    }
    std::size_t degree_sum = 0;
    for (const auto& r : g.rows_)
      degree_sum += r.count();
    g.size_ = degree_sum / 2;
    return g;
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept { return size_; }

  const VertexSet& neighbors(Vertex v) const {
    check(v);
    return rows_[v];
  }

  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
  }

  bool adjacent(Vertex u, Vertex v) const {
    check(v);
    return neighbors(u).contains(v);
  }

  std::size_t degree(Vertex v) const { return neighbors(v).count(); }

  std::size_t min_degree() const {
    std::size_t d = order() == 0 ? 0 : std::numeric_limits<std::size_t>::max();
    for (const auto& r : rows_)
      d = std::min(d, r.count());
    return d;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& r : rows_)
      d = std::max(d, r.count());
    return d;
  }

  /// Edges with first < second, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (Vertex u = 0; u < order(); ++u)
      rows_[u].for_each([&](Vertex v) {
        if (u < v)
          out.push_back({u, v});
      });
    return out;
  }

  /// Single-word adjacency rows; requires order() <= 64.
  std::vector<Mask> adjacency_masks() const {
    std::vector<Mask> out;
    out.reserve(order());
    for (const auto& r : rows_)
      out.push_back(r.to_mask());
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  void check(Vertex v) const {
    if (v >= order())
      throw GraphError("vertex " + std::to_string(v) + " not in graph of order " +
                       std::to_string(order()));
  }

  std::vector<VertexSet> rows_;
  std::size_t size_ = 0;
};

inline const VertexSet& neighbors(const Graph& g, Vertex v) { return g.neighbors(v); }

inline bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.neighbors(v).empty())
      return true;
  return false;
}

inline std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    d[v] = g.degree(v);
  return d;
}

/// Sorted degree sequence; an isomorphism invariant.
inline std::vector<std::size_t> degree_multiset(const Graph& g) {
  auto d = degree_sequence(g);
  std::sort(d.begin(), d.end());
  return d;
}

/// Maps vertex v to perm[v]. Throws GraphError unless perm is a bijection on 0..n-1.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const auto n = g.order();
  if (perm.size() != n)
    throw GraphError("relabel: permutation has " + std::to_string(perm.size()) +
                     " entries, graph has " + std::to_string(n) + " vertices");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p])
      throw GraphError("relabel: map is not a bijection on 0.." + std::to_string(n - 1));
    seen[p] = true;
  }
  auto edges = g.edges();
  for (auto& e : edges)
    e = Edge{perm[e.first], perm[e.second]};
  return Graph::from_edge_list(n, edges);
}

/// Breadth-first hop counts from source; `unreachable` for other components.
inline std::vector<std::size_t> distances(const Graph& g, Vertex source) {
  g.neighbors(source); // range check
  std::vector<std::size_t> dist(g.order(), unreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](Vertex w) {
      if (dist[w] == unreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0)
    return true;
  const auto d = distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == unreachable; });
}

inline std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t components = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen[v])
      continue;
    ++components;
    const auto d = distances(g, v);
    for (Vertex w = 0; w < g.order(); ++w)
      if (d[w] != unreachable)
        seen[w] = true;
  }
  return components;
}

struct RadiusDiameter {
  std::size_t radius = 0;
  std::size_t diameter = 0;

  friend bool operator==(const RadiusDiameter&, const RadiusDiameter&) = default;
};

/// Minimum and maximum eccentricity. Throws DisconnectedError on disconnected
/// or empty input.
inline RadiusDiameter radius_diameter(const Graph& g) {
  if (g.order() == 0)
    throw DisconnectedError("radius/diameter undefined on the empty graph");
  RadiusDiameter rd{std::numeric_limits<std::size_t>::max(), 0};
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = distances(g, v);
    const auto ecc = *std::max_element(d.begin(), d.end());
    if (ecc == unreachable)
      throw DisconnectedError("radius/diameter undefined: graph is disconnected");
    rd.radius = std::min(rd.radius, ecc);
    rd.diameter = std::max(rd.diameter, ecc);
  }
  return rd;
}

/// Copy of g with edge {u,v} removed (no-op if absent).
inline Graph without_edge(const Graph& g, Edge e) {
  auto edges = g.edges();
  std::erase(edges, e.canonical());
  return Graph::from_edge_list(g.order(), edges);
}

/// True iff removing the edge increases the number of components.
inline bool is_bridge(const Graph& g, Edge e) {
  if (!g.adjacent(e.first, e.second))
    return false;
  const auto d = distances(without_edge(g, e), e.first);
  return d[e.second] == unreachable;
}

} // namespace totdom
