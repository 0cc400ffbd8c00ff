#pragma once

/**
 * Generators for the named graph families.
 *
 * Vertex layouts are fixed contracts; the closed-form predictions in
 * oracles.hpp address vertices through them.
 *
 *   path(n), cycle(n)        0..n-1 in traversal order; cycle closes n-1 -- 0
 *   complete(n)              all pairs
 *   complete_bipartite(m,n)  part A = 0..m-1, part B = m..m+n-1
 *   star(n)                  hub 0, leaves 1..n  (K_{1,n})
 *   wheel(n)                 hub 0, rim 1..n in cycle order
 *   book(n)                  centers 0 and 1; page i in 1..n is {2i, 2i+1}
 *                            with edges 0--2i, 1--2i+1, 2i--2i+1
 *   windmill(p,q)            center 0; copy i in 1..q is 1+(i-1)(p-1) .. i(p-1)
 *   kragujevac(s_1..s_t)     center 0; each branch lists its root, then
 *                            middle, leaf for each of its s_i pendant P_3 arms
 *   petersen, grotzsch, herschel   fixed constants
 */

#include "totdom/error.hpp"
#include "totdom/graph.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace totdom {

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  wheel,
  book,
  windmill,
  kragujevac,
  petersen,
  grotzsch,
  herschel,
};

inline constexpr std::array<std::pair<Family, std::string_view>, 12> family_names{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::star, "star"},
    {Family::wheel, "wheel"},
    {Family::book, "book"},
    {Family::windmill, "windmill"},
    {Family::kragujevac, "kragujevac"},
    {Family::petersen, "petersen"},
    {Family::grotzsch, "grotzsch"},
    {Family::herschel, "herschel"},
}};

inline std::string_view to_string(Family f) {
  for (const auto& [family, name] : family_names)
    if (family == f)
      return name;
  return "?";
}

inline std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& [family, n] : family_names)
    if (n == name)
      return family;
  return std::nullopt;
}

/// Family name plus its integer parameters (see the table above).
struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;

  int param(std::size_t i) const { return params.at(i); }

  /// e.g. "path(6)", "windmill(3,2)", "kragujevac(2,2)", "petersen".
  std::string label() const {
    std::string s(to_string(family));
    if (params.empty())
      return s;
    s += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(params[i]);
    }
    return s + ')';
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline FamilySpec path_spec(int n) { return {Family::path, {n}}; }
inline FamilySpec cycle_spec(int n) { return {Family::cycle, {n}}; }
inline FamilySpec complete_spec(int n) { return {Family::complete, {n}}; }
inline FamilySpec complete_bipartite_spec(int m, int n) { return {Family::complete_bipartite, {m, n}}; }
inline FamilySpec star_spec(int n) { return {Family::star, {n}}; }
inline FamilySpec wheel_spec(int n) { return {Family::wheel, {n}}; }
inline FamilySpec book_spec(int n) { return {Family::book, {n}}; }
inline FamilySpec windmill_spec(int p, int q) { return {Family::windmill, {p, q}}; }
inline FamilySpec kragujevac_spec(std::vector<int> branches) {
  return {Family::kragujevac, std::move(branches)};
}

namespace detail {

inline void require_arity(const FamilySpec& spec, std::size_t want) {
  if (spec.params.size() != want)
    throw ParameterError(std::string(to_string(spec.family)) + " takes " + std::to_string(want) +
                         " parameter(s), got " + std::to_string(spec.params.size()));
}

inline std::size_t require_at_least(const FamilySpec& spec, std::size_t i, int lo,
                                    std::string_view what) {
  const int v = spec.params[i];
  if (v < lo)
    throw ParameterError(std::string(to_string(spec.family)) + ": " + std::string(what) + " = " +
                         std::to_string(v) + " violates " + std::string(what) +
                         " >= " + std::to_string(lo));
  return static_cast<std::size_t>(v);
}

inline Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph::from_edge_list(10, e);
}

// Mycielskian of C_5: outer cycle 0..4, shadows 5..9 (shadow of i is adjacent
// to the cycle neighbors of i), hub 10 adjacent to every shadow.
inline Graph grotzsch_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({5 + i, (i + 1) % 5});
    e.push_back({5 + i, (i + 4) % 5});
    e.push_back({10, 5 + i});
  }
  return Graph::from_edge_list(11, e);
}

// Smallest non-Hamiltonian polyhedral graph: bipartite, 11 vertices, 18 edges,
// three vertices of degree 4 (1, 3, 10) and eight of degree 3.
inline Graph herschel_graph() {
  return Graph::from_edge_list(11, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 5}, {1, 6},
                                    {2, 3}, {2, 7}, {3, 8}, {3, 9}, {4, 5}, {4, 9},
                                    {5, 10}, {6, 7}, {6, 10}, {7, 8}, {8, 10}, {9, 10}});
}

} // namespace detail

/// Builds the family instance. Throws ParameterError naming the violated bound.
inline Graph generate(const FamilySpec& spec) {
  using detail::require_arity;
  using detail::require_at_least;
  std::vector<Edge> e;
  switch (spec.family) {
  case Family::path: {
    require_arity(spec, 1);
    const auto n = require_at_least(spec, 0, 1, "n");
    for (Vertex i = 0; i + 1 < n; ++i)
      e.push_back({i, i + 1});
    return Graph::from_edge_list(n, e);
  }
  case Family::cycle: {
    require_arity(spec, 1);
    const auto n = require_at_least(spec, 0, 3, "n");
    for (Vertex i = 0; i < n; ++i)
      e.push_back({i, (i + 1) % n});
    return Graph::from_edge_list(n, e);
  }
  case Family::complete: {
    require_arity(spec, 1);
    const auto n = require_at_least(spec, 0, 1, "n");
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        e.push_back({u, v});
    return Graph::from_edge_list(n, e);
  }
  case Family::complete_bipartite: {
    require_arity(spec, 2);
    const auto m = require_at_least(spec, 0, 1, "m");
    const auto n = require_at_least(spec, 1, 1, "n");
    for (Vertex u = 0; u < m; ++u)
      for (Vertex v = m; v < m + n; ++v)
        e.push_back({u, v});
    return Graph::from_edge_list(m + n, e);
  }
  case Family::star: {
    require_arity(spec, 1);
    const auto n = require_at_least(spec, 0, 1, "n");
    for (Vertex v = 1; v <= n; ++v)
      e.push_back({0, v});
    return Graph::from_edge_list(n + 1, e);
  }
  case Family::wheel: {
    require_arity(spec, 1);
    const auto n = require_at_least(spec, 0, 3, "n");
    for (Vertex i = 0; i < n; ++i) {
      e.push_back({0, 1 + i});
      e.push_back({1 + i, 1 + (i + 1) % n});
    }
    return Graph::from_edge_list(n + 1, e);
  }
  case Family::book: {
    require_arity(spec, 1);
    const auto n = require_at_least(spec, 0, 1, "n");
    e.push_back({0, 1});
    for (Vertex i = 1; i <= n; ++i) {
      e.push_back({0, 2 * i});
      e.push_back({1, 2 * i + 1});
      e.push_back({2 * i, 2 * i + 1});
    }
    return Graph::from_edge_list(2 * n + 2, e);
  }
  case Family::windmill: {
    require_arity(spec, 2);
    const auto p = require_at_least(spec, 0, 2, "p");
    const auto q = require_at_least(spec, 1, 1, "q");
    for (std::size_t copy = 0; copy < q; ++copy) {
      std::vector<Vertex> clique{0};
      for (std::size_t j = 0; j + 1 < p; ++j)
        clique.push_back(1 + copy * (p - 1) + j);
      for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b)
          e.push_back({clique[a], clique[b]});
    }
    return Graph::from_edge_list(q * (p - 1) + 1, e);
  }
  case Family::kragujevac: {
    if (spec.params.size() < 2)
      throw ParameterError("kragujevac: branch count t = " + std::to_string(spec.params.size()) +
                           " violates t >= 2");
    Vertex next = 1;
    for (std::size_t b = 0; b < spec.params.size(); ++b) {
      const auto arms = require_at_least(spec, b, 1, "s_" + std::to_string(b + 1));
      const Vertex root = next++;
      e.push_back({0, root});
      for (std::size_t a = 0; a < arms; ++a) {
        const Vertex middle = next++;
        const Vertex leaf = next++;
        e.push_back({root, middle});
        e.push_back({middle, leaf});
      }
    }
    return Graph::from_edge_list(next, e);
  }
  case Family::petersen:
    require_arity(spec, 0);
    return detail::petersen_graph();
  case Family::grotzsch:
    require_arity(spec, 0);
    return detail::grotzsch_graph();
  case Family::herschel:
    require_arity(spec, 0);
    return detail::herschel_graph();
  }
  throw ParameterError("unknown family");
}

} // namespace totdom
