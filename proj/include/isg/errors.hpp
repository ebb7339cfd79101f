#pragma once

#include <stdexcept>
#include <string>

namespace isg {

/// Malformed input document (graph file or allocation file). Carries the
/// 1-based line number of the offending line when one can be named.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message)
      : std::runtime_error(message) {}
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// Instance exceeds a documented size guard for an exact/exhaustive
/// operation. Thrown before any unbounded work starts.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A game was requested on a graph with an isolated vertex. Games are
/// only defined on graphs where every vertex has an incident edge.
class IsolatedVertexError : public std::invalid_argument {
 public:
  explicit IsolatedVertexError(int vertex)
      : std::invalid_argument("graph has isolated vertex " + std::to_string(vertex)),
        vertex_(vertex) {}

  int vertex() const { return vertex_; }

 private:
  int vertex_ = 0;
};

}  // namespace isg
