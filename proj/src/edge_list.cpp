#include "antires/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace antires {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_nonnegative(std::string_view field, long long& out) {
  if (field.empty() || field.front() == '-' || field.front() == '+') return false;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int line_no = 0;
  long long n = -1;
  std::optional<AdjacencyMatrix> matrix;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);

    if (!matrix) {
      if (fields.size() != 2 || fields[0] != "n") {
        throw ParseError(ParseErrorKind::kMissingHeader, line_no,
                         "expected header 'n <count>' before any edge");
      }
      if (!parse_nonnegative(fields[1], n) || n > (1 << 24)) {
        throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                         "bad vertex count '" + std::string(fields[1]) + "'");
      }
      matrix.emplace(static_cast<int>(n));
      continue;
    }

    long long u = 0;
    long long v = 0;
    if (fields.size() != 2 || !parse_nonnegative(fields[0], u) ||
        !parse_nonnegative(fields[1], v)) {
      throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                       "expected '<u> <v>', got '" + std::string(line) + "'");
    }
    if (u >= n || v >= n) {
      throw ParseError(ParseErrorKind::kIdOutOfRange, line_no,
                       "vertex id out of range [0," + std::to_string(n) + ")");
    }
    if (u == v) {
      throw ParseError(ParseErrorKind::kSelfLoop, line_no,
                       "self-loop on vertex " + std::to_string(u));
    }
    const auto a = static_cast<VertexId>(u);
    const auto b = static_cast<VertexId>(v);
    if (matrix->test(a, b)) {
      throw ParseError(ParseErrorKind::kDuplicateEdge, line_no,
                       "duplicate edge (" + std::to_string(std::min(a, b)) + "," +
                           std::to_string(std::max(a, b)) + ")");
    }
    matrix->set(a, b);
  }
  if (!matrix) {
    throw ParseError(ParseErrorKind::kMissingHeader, line_no,
                     "missing header 'n <count>'");
  }
  return Graph::from_matrix(std::move(*matrix));
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << serialize_edge_list(g);
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace antires
