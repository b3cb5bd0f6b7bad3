#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace antires {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphErrorKind {
  kNegativeOrder,
  kIdOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
};

// Raised while building a graph or when a query names a vertex that does not
// exist.
class GraphError : public Error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : Error(what), kind_(kind) {}

  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

// A documented precondition of an operation does not hold (target k out of
// range, probe set covering every vertex, mismatched vertex sets, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace antires
