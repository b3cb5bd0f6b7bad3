#include "antires/fixtures.hpp"

#include <algorithm>
#include <map>

namespace antires {

namespace {

using NamedEdge = std::pair<std::string_view, std::string_view>;

NamedGraph make(std::string name, std::vector<std::string> vertices,
                std::initializer_list<NamedEdge> edges) {
  std::map<std::string_view, VertexId> ids;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    ids[vertices[i]] = static_cast<VertexId>(i);
  }
  std::vector<Edge> list;
  for (const auto& [a, b] : edges) list.push_back({ids.at(a), ids.at(b)});
  Graph g = build_graph(static_cast<int>(vertices.size()), list);
  return {std::move(name), std::move(g), std::move(vertices)};
}

}  // namespace

std::optional<VertexId> NamedGraph::id_of(std::string_view vertex) const {
  const auto it = std::find(vertex_names.begin(), vertex_names.end(), vertex);
  if (it == vertex_names.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertex_names.begin());
}

std::vector<NamedGraph> fixtures() {
  std::vector<NamedGraph> out;
  out.push_back(make("fig2_g1", {"v", "v1", "v2", "v3"},
                     {{"v", "v1"}, {"v", "v2"}, {"v", "v3"}}));
  // Drawn as z2-v-x2-z2-y2-v: K4 minus the edge x2-y2.
  out.push_back(make("fig2_g2", {"v", "x2", "y2", "z2"},
                     {{"v", "x2"}, {"v", "y2"}, {"v", "z2"}, {"x2", "z2"}, {"y2", "z2"}}));
  // Drawn as v-z2-y2-x2-z2.
  out.push_back(make("fig2_g3", {"v", "x2", "y2", "z2"},
                     {{"v", "z2"}, {"z2", "y2"}, {"y2", "x2"}, {"x2", "z2"}}));
  out.push_back(make("fig3",
                     {"v", "x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4", "z1", "z2"},
                     {{"x4", "y4"}, {"y4", "z1"}, {"z1", "y1"}, {"y1", "x1"},
                      {"x2", "y2"}, {"y2", "z2"}, {"z2", "y3"}, {"y3", "x3"},
                      {"v", "x1"}, {"v", "x2"}, {"v", "x3"}, {"v", "x4"}}));
  out.push_back(make("fig4a", {"cv", "v1", "v2", "v3", "v4"},
                     {{"v1", "v3"}, {"v2", "v4"}}));
  out.push_back(make("fig4b", {"v12", "v22", "v32", "v42", "v52", "cv2"},
                     {{"v22", "cv2"}, {"cv2", "v32"}, {"v32", "v52"}, {"v52", "v22"},
                      {"v12", "v42"}}));
  return out;
}

std::optional<NamedGraph> find_fixture(std::string_view name) {
  for (auto& f : fixtures()) {
    if (f.name == name) return std::move(f);
  }
  return std::nullopt;
}

VertexMatching match_by_name(const NamedGraph& a, const NamedGraph& b) {
  VertexMatching m;
  for (std::size_t i = 0; i < a.vertex_names.size(); ++i) {
    if (const auto j = b.id_of(a.vertex_names[i])) {
      m.emplace_back(static_cast<VertexId>(i), *j);
    }
  }
  return m;
}

}  // namespace antires
