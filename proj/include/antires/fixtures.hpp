#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antires/antiresolving.hpp"
#include "antires/graph.hpp"

namespace antires {

// A graph whose vertices also carry names. Names identify vertices across
// graphs whose ids do not line up.
struct NamedGraph {
  std::string name;
  Graph graph;
  std::vector<std::string> vertex_names;  // indexed by id

  std::optional<VertexId> id_of(std::string_view vertex) const;
};

// The worked-example graphs:
//   fig2_g1  star: v joined to v1, v2, v3
//   fig2_g2  v joined to x2, y2, z2; z2 joined to x2 and y2
//   fig2_g3  triangle x2 y2 z2 with v pendant on z2
//   fig3     hub v joined to the ends of the paths x4-y4-z1-y1-x1 and
//            x2-y2-z2-y3-x3
//   fig4a    edges v1-v3 and v2-v4 plus the isolated centre cv
//   fig4b    4-cycle v22-cv2-v32-v52 plus the disjoint edge v12-v42
std::vector<NamedGraph> fixtures();
std::optional<NamedGraph> find_fixture(std::string_view name);

// Vertices sharing a name, as (id in a, id in b).
VertexMatching match_by_name(const NamedGraph& a, const NamedGraph& b);

}  // namespace antires
