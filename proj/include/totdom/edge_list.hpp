#pragma once

// Edge-list text format.
//
//   line 1:   "n m"
//   m lines:  "u v"   (0 <= u, v < n)
//
// Blank lines and lines whose first non-space character is '#' are ignored.
// The canonical form written by serialize() lists each edge once with u < v,
// sorted lexicographically, and ends with a newline.

#include "totdom/error.hpp"
#include "totdom/graph.hpp"

#include <charconv>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace totdom {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Two non-negative integers separated by whitespace, nothing else.
inline bool parse_pair(std::string_view line, std::size_t& a, std::size_t& b) {
  auto read = [&](std::size_t& out) {
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos)
      return false;
    line.remove_prefix(start);
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), out);
    if (ec != std::errc{} || ptr == line.data())
      return false;
    line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
    return true;
  };
  if (!read(a) || !read(b))
    return false;
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

} // namespace detail

inline Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::size_t header_line = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#')
      continue;
    std::size_t a = 0, b = 0;
    if (!detail::parse_pair(line, a, b))
      throw ParseError(line_no, have_header ? "expected \"u v\"" : "expected header \"n m\"");
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (edges.size() == m)
      throw ParseError(line_no, "more edge lines than the " + std::to_string(m) +
                                    " declared in the header");
    if (a == b)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    if (a >= n || b >= n)
      throw ParseError(line_no, "vertex index out of range 0.." +
                                    (n == 0 ? std::string("(empty)") : std::to_string(n - 1)));
    edges.push_back({a, b});
  }
  if (!have_header)
    throw ParseError(line_no == 0 ? 1 : line_no, "missing header \"n m\"");
  if (edges.size() != m)
    throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  return Graph::from_edge_list(n, edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& e : g.edges())
    out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
  return out;
}

} // namespace totdom
