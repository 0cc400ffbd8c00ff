#pragma once

// Binary and unary graph operations. Index layouts:
//
//   disjoint_union(g1, g2)     g1 at 0..n1-1, g2 shifted to n1..n1+n2-1
//   join(g1, g2)               as disjoint_union, plus every g1--g2 pair
//   composition(g1, g2)        (a_i, b_j) -> i*n2 + j
//   cartesian_product(g1, g2)  (a_i, b_j) -> i*n2 + j
//   corona(g1, g2)             g1 at 0..n1-1; copy i of g2 at n1 + i*n2 ...
//   subdivision(g)             original 0..n-1; edge k (canonical order) -> n + k
//   degree_splitting(g)        original 0..n-1; class i (ascending degree,
//                              classes of size >= 2 only) -> n + i

#include "totdom/graph.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace totdom {

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const auto n1 = g1.order();
  auto edges = g1.edges();
  for (const auto& e : g2.edges())
    edges.push_back({e.first + n1, e.second + n1});
  return Graph::from_edge_list(n1 + g2.order(), edges);
}

inline Graph join(const Graph& g1, const Graph& g2) {
  const auto n1 = g1.order();
  const auto n2 = g2.order();
  auto edges = g1.edges();
  for (const auto& e : g2.edges())
    edges.push_back({e.first + n1, e.second + n1});
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < n2; ++v)
      edges.push_back({u, n1 + v});
  return Graph::from_edge_list(n1 + n2, edges);
}

/// Lexicographic product: (a1,b1) ~ (a2,b2) iff a1 ~ a2, or a1 == a2 and b1 ~ b2.
inline Graph composition(const Graph& g1, const Graph& g2) {
  const auto n1 = g1.order();
  const auto n2 = g2.order();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n1; ++a) {
    for (const auto& e : g2.edges())
      edges.push_back({a * n2 + e.first, a * n2 + e.second});
  }
  for (const auto& e : g1.edges())
    for (Vertex b1 = 0; b1 < n2; ++b1)
      for (Vertex b2 = 0; b2 < n2; ++b2)
        edges.push_back({e.first * n2 + b1, e.second * n2 + b2});
  return Graph::from_edge_list(n1 * n2, edges);
}

/// (a,b) ~ (a',b') iff (a == a' and b ~ b') or (b == b' and a ~ a').
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const auto n1 = g1.order();
  const auto n2 = g2.order();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n1; ++a)
    for (const auto& e : g2.edges())
      edges.push_back({a * n2 + e.first, a * n2 + e.second});
  for (const auto& e : g1.edges())
    for (Vertex b = 0; b < n2; ++b)
      edges.push_back({e.first * n2 + b, e.second * n2 + b});
  return Graph::from_edge_list(n1 * n2, edges);
}

inline Graph corona(const Graph& g1, const Graph& g2) {
  const auto n1 = g1.order();
  const auto n2 = g2.order();
  auto edges = g1.edges();
  const auto inner = g2.edges();
  for (Vertex i = 0; i < n1; ++i) {
    const Vertex base = n1 + i * n2;
    for (const auto& e : inner)
      edges.push_back({base + e.first, base + e.second});
    for (Vertex j = 0; j < n2; ++j)
      edges.push_back({i, base + j});
  }
  return Graph::from_edge_list(n1 * (1 + n2), edges);
}

inline Graph subdivision(const Graph& g) {
  const auto n = g.order();
  const auto original = g.edges();
  std::vector<Edge> edges;
  edges.reserve(2 * original.size());
  for (std::size_t k = 0; k < original.size(); ++k) {
    edges.push_back({original[k].first, n + k});
    edges.push_back({original[k].second, n + k});
  }
  return Graph::from_edge_list(n + original.size(), edges);
}

/// Degree classes with at least two members, ordered by ascending degree.
inline std::vector<std::vector<Vertex>> degree_split_classes(const Graph& g) {
  std::map<std::size_t, std::vector<Vertex>> by_degree;
  for (Vertex v = 0; v < g.order(); ++v)
    by_degree[g.degree(v)].push_back(v);
  std::vector<std::vector<Vertex>> classes;
  for (auto& [degree, members] : by_degree)
    if (members.size() >= 2)
      classes.push_back(std::move(members));
  return classes;
}

inline Graph degree_splitting(const Graph& g) {
  const auto n = g.order();
  const auto classes = degree_split_classes(g);
  auto edges = g.edges();
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (auto v : classes[i])
      edges.push_back({v, n + i});
  return Graph::from_edge_list(n + classes.size(), edges);
}

} // namespace totdom
