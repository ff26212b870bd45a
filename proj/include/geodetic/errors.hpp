#ifndef GEODETIC_ERRORS_HPP
#define GEODETIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace geodetic {

// Base class for everything this library throws on invalid input or
// violated preconditions. Reported outcomes (e.g. a size cap that was
// exceeded) are not errors and are returned in result types instead.
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

class IndexOutOfRangeError : public GraphError {
 public:
  IndexOutOfRangeError(int index, int bound)
      : GraphError("vertex index " + std::to_string(index) +
                   " out of range [0, " + std::to_string(bound) + ")"),
        index(index),
        bound(bound) {}
  int index;
  int bound;
};

class SelfLoopError : public GraphError {
 public:
  explicit SelfLoopError(int vertex)
      : GraphError("self-loop at vertex " + std::to_string(vertex)),
        vertex(vertex) {}
  int vertex;
};

class DuplicateArcError : public GraphError {
 public:
  DuplicateArcError(int tail, int head)
      : GraphError("duplicate arc (" + std::to_string(tail) + ", " +
                   std::to_string(head) + ")"),
        tail(tail),
        head(head) {}
  int tail;
  int head;
};

class NotATreeError : public GraphError {
 public:
  explicit NotATreeError(const std::string& why)
      : GraphError("underlying graph is not a tree: " + why) {}
};

class HasTwoCycleError : public GraphError {
 public:
  HasTwoCycleError(int u, int v)
      : GraphError("digraph contains the 2-cycle {" + std::to_string(u) +
                   ", " + std::to_string(v) + "}"),
        u(u),
        v(v) {}
  int u;
  int v;
};

class PreconditionError : public GraphError {
 public:
  explicit PreconditionError(const std::string& what) : GraphError(what) {}
};

class InfeasibleParametersError : public GraphError {
 public:
  explicit InfeasibleParametersError(const std::string& what)
      : GraphError(what) {}
};

class InvalidInstanceError : public GraphError {
 public:
  explicit InvalidInstanceError(const std::string& what) : GraphError(what) {}
};

class StructuralMismatchError : public GraphError {
 public:
  explicit StructuralMismatchError(const std::string& failed_check)
      : GraphError("reduction structure check failed: " + failed_check),
        failed_check(failed_check) {}
  std::string failed_check;
};

class ParseError : public GraphError {
 public:
  explicit ParseError(const std::string& what)
      : GraphError("parse error: " + what) {}
};

}  // namespace geodetic

#endif
