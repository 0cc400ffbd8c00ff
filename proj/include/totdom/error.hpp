#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace totdom {

/// Invalid graph input: bad vertex index, self-loop, non-bijective relabeling.
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Edge-list text that cannot be parsed. Carries the 1-based line number.
class ParseError : public GraphError {
public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Total domination is undefined on graphs with an isolated vertex.
class IsolatedVertexError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Metric queries that need a connected graph.
class DisconnectedError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Order exceeds the configured enumeration cap.
class CapExceededError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// Family or construct parameters outside their validity range.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace totdom
