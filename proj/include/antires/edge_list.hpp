#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "antires/errors.hpp"
#include "antires/graph.hpp"

namespace antires {

// Plain-text edge list:
//
//   # comment lines (first non-blank character '#') and blank lines anywhere
//   n <vertex count>
//   <u> <v>
//   ...
//
// Ids are 0-based. Writing emits the header and then canonical (u < v) edges
// in lexicographic order, one per line, '\n'-terminated.

enum class ParseErrorKind {
  kMissingHeader,
  kMalformedLine,
  kIdOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }  // 1-based

 private:
  ParseErrorKind kind_;
  int line_;
};

Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// Throws Error when the file cannot be opened or written.
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

}  // namespace antires
