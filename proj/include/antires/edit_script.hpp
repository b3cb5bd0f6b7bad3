#pragma once

#include <cstddef>
#include <vector>

#include "antires/graph.hpp"

namespace antires {

enum class EditKind { kAdd, kRemove };

struct EditOp {
  EditKind kind = EditKind::kAdd;
  Edge edge;  // canonical

  friend bool operator==(const EditOp&, const EditOp&) = default;
};

// Ordered edge additions/removals turning one graph into another.
class EditScript {
 public:
  void add(Edge e) { ops_.push_back({EditKind::kAdd, e.canonical()}); }
  void remove(Edge e) { ops_.push_back({EditKind::kRemove, e.canonical()}); }

  const std::vector<EditOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }
  std::size_t additions() const;
  std::size_t removals() const;

  // Replays the script. Throws if an addition hits an existing edge or a
  // removal a missing one.
  Graph apply(const Graph& g) const;

  friend bool operator==(const EditScript&, const EditScript&) = default;

 private:
  std::vector<EditOp> ops_;
};

}  // namespace antires
