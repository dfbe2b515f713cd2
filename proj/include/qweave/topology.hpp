#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qweave/graph.hpp"

namespace qweave {

/// Vertex descriptor for the explicit-id constructor overloads.
struct VertexSpec {
  VertexId id;
  std::optional<QlanVertexLabel> label;
};

std::vector<VertexSpec> default_vertex_specs(std::size_t n);

// Explicit-vertex constructors. The first element of a part is its hub
// where the family distinguishes one (Star center, BinaryStar hubs).
Graph make_path(const std::vector<VertexSpec>& vs);
Graph make_even_cycle(const std::vector<VertexSpec>& vs);
Graph make_star(const std::vector<VertexSpec>& vs);  // vs[0] is the center
Graph make_binary_star(const std::vector<VertexSpec>& part1,
                       const std::vector<VertexSpec>& part2);
Graph make_complete_bipartite(const std::vector<VertexSpec>& part1,
                              const std::vector<VertexSpec>& part2);
Graph make_complete(const std::vector<VertexSpec>& vs);
Graph make_hypercube(std::size_t dim);
/// parents[k] is the parent index of vertex k+1 (vertex 0 is the root),
/// so a list of size n-1 describes a tree on n vertices.
Graph make_tree(const std::vector<std::size_t>& parents);

enum class TopologyKind {
  Path,
  EvenCycle,
  Star,
  BinaryStar,
  CompleteBipartite,
  Complete,
  Hypercube,
  Tree,
};

/// Size-driven dispatch with default vertex ids 0..n-1. `sizes` carries
/// {n} for Path/EvenCycle/Star/Complete, {n1,n2} for BinaryStar and
/// CompleteBipartite, {dim} for Hypercube; Tree reads `tree_parents`.
struct TopologyParams {
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> tree_parents;
};

Graph make_topology(TopologyKind kind, const TopologyParams& params);

}  // namespace qweave
