#include "antires/edit_script.hpp"

#include <algorithm>
#include <string>

#include "antires/errors.hpp"

namespace antires {

std::size_t EditScript::additions() const {
  return static_cast<std::size_t>(std::count_if(
      ops_.begin(), ops_.end(), [](const EditOp& op) { return op.kind == EditKind::kAdd; }));
}

std::size_t EditScript::removals() const { return ops_.size() - additions(); }

Graph EditScript::apply(const Graph& g) const {
  AdjacencyMatrix m = g.matrix();
  for (const EditOp& op : ops_) {
    check_vertex(g, op.edge.u);
    check_vertex(g, op.edge.v);
    const bool present = m.test(op.edge.u, op.edge.v);
    if (op.kind == EditKind::kAdd) {
      if (present || op.edge.u == op.edge.v) {
        throw PreconditionError("script adds existing edge (" +
                                std::to_string(op.edge.u) + "," +
                                std::to_string(op.edge.v) + ")");
      }
      m.set(op.edge.u, op.edge.v);
    } else {
      if (!present) {
        throw PreconditionError("script removes missing edge (" +
                                std::to_string(op.edge.u) + "," +
                                std::to_string(op.edge.v) + ")");
      }
      m.reset(op.edge.u, op.edge.v);
    }
  }
  return Graph::from_matrix(std::move(m));
}

}  // namespace antires
