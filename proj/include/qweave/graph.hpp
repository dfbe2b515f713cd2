#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qweave/errors.hpp"

namespace qweave {

enum class QlanRole : std::uint8_t { Super, Client };

/// Identity of a qubit within the two-QLAN network: which QLAN it belongs
/// to, whether it sits at the super-node, and its 1-based client index.
/// A super-node always has index 1, and each QLAN has exactly one.
struct QlanVertexLabel {
  int qlan_id = 0;
  QlanRole role = QlanRole::Client;
  int index = 1;

  auto operator<=>(const QlanVertexLabel&) const = default;

  std::string to_string() const;  // "1_super_1", "2_client_3"
};

/// Opaque totally-ordered vertex identifier. The numeric order is the
/// tie-breaking order used everywhere (bipartition witnesses, default
/// measurement neighbors, serialization).
struct VertexId {
  std::uint32_t value = 0;

  auto operator<=>(const VertexId&) const = default;
};

using Edge = std::pair<VertexId, VertexId>;  // canonical: first < second

inline Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Finite undirected simple graph over labeled vertices.
///
/// Values are cheap to copy at the scales this library targets and are
/// treated as immutable once built: every transform returns a new graph.
/// Adjacency is stored as per-vertex sorted sets so neighborhood reads
/// are ordered and O(deg) scans dominate local complementation.
class Graph {
 public:
  Graph() = default;

  void add_vertex(VertexId v, std::optional<QlanVertexLabel> label = {});
  void add_edge(VertexId a, VertexId b);

  bool has_vertex(VertexId v) const { return adjacency_.count(v) != 0; }
  bool has_edge(VertexId a, VertexId b) const;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;

  std::vector<VertexId> vertices() const;           // ascending
  std::vector<Edge> edges() const;                  // lexicographic
  std::set<VertexId> vertex_set() const;

  const std::set<VertexId>& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  const std::optional<QlanVertexLabel>& label(VertexId v) const;
  std::string vertex_name(VertexId v) const;  // label string or decimal id

  bool operator==(const Graph& other) const;

 private:
  struct VertexData {
    std::optional<QlanVertexLabel> label;
    std::set<VertexId> adj;
  };

  const VertexData& at(VertexId v) const;

  std::map<VertexId, VertexData> adjacency_;
};

/// Labeled equality: identical vertex sets (ids and labels) and edge sets.
/// Deliberately not isomorphism.
bool graph_equal(const Graph& a, const Graph& b);

/// N_i = { j : (i,j) in E }.
std::set<VertexId> neighborhood(const Graph& g, VertexId i);

/// G[A]: vertices A, edges of g with both endpoints in A.
Graph induced_subgraph(const Graph& g, const std::set<VertexId>& a);

/// Complement on the full vertex set: edge set V^2 \ E.
Graph complement(const Graph& g);

/// tau_i(G): complement the subgraph induced by N_i, leave the rest alone.
Graph local_complement(const Graph& g, VertexId i);

/// G - i: drop vertex i and its incident edges.
Graph delete_vertex(const Graph& g, VertexId i);

/// Two-coloring witness. part1/part2 are disjoint, cover the vertices,
/// and no edge runs inside a part.
struct Bipartition {
  std::set<VertexId> part1;
  std::set<VertexId> part2;

  bool operator==(const Bipartition&) const = default;
};

/// Returns a witness bipartition when g has no odd cycle, std::nullopt
/// otherwise. Deterministic: components are colored in ascending order of
/// their smallest vertex, each component's smallest vertex takes the color
/// of the globally smallest vertex, so part1 always contains the smallest
/// id. If the coloring leaves part2 empty (edgeless graphs) and there are
/// at least two vertices, the largest vertex moves to part2 so both parts
/// are non-empty.
std::optional<Bipartition> two_coloring(const Graph& g);

/// Validates that `bp` really is a proper bipartition of g.
bool is_valid_bipartition(const Graph& g, const Bipartition& bp);

}  // namespace qweave
