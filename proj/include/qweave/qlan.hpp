#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qweave/graph.hpp"

namespace qweave {

inline constexpr std::size_t kQlanNodeLimit = 64;

/// EPR-pair bookkeeping. Counts only ever grow; the teleportation-based
/// intra-QLAN distribution consumes one pair per client, the one remote
/// CZ consumes a single inter-QLAN pair.
struct ResourceLedger {
  std::uint64_t epr_generated = 0;
  std::uint64_t epr_consumed_intra = 0;
  std::uint64_t epr_consumed_inter = 0;

  bool operator==(const ResourceLedger&) const = default;
};

/// One QLAN: a super-node and its clients holding a star graph state
/// centered at the super-node.
struct Qlan {
  int id = 0;
  VertexId super_vertex;
  std::vector<VertexId> client_vertices;  // index k holds client k+1
  Graph state_graph;

  std::size_t size() const { return 1 + client_vertices.size(); }
};

/// Deterministic vertex id for a QLAN label: supers at qlan_id*256,
/// clients right after in index order. Keeps QLAN 1 below QLAN 2 and the
/// super below its clients in the global vertex order.
VertexId qlan_vertex_id(int qlan_id, QlanRole role, int index);

/// The two-QLAN system: both stars, the post-merge binary star (absent
/// until merge_remote_cz runs) and the EPR ledger.
struct QlanNetwork {
  Qlan qlan1;
  Qlan qlan2;
  std::optional<Graph> shared_graph;
  ResourceLedger ledger;

  bool merged() const { return shared_graph.has_value(); }
};

/// Build one QLAN of n nodes (1 super + n-1 clients) with its star state.
/// Ledger delta: n-1 pairs generated and consumed for teleporting the
/// client qubits out.
Qlan build_qlan(int id, std::size_t n, ResourceLedger& ledger);

/// Build both QLANs with ids 1 and 2.
QlanNetwork build_network(std::size_t n1, std::size_t n2);

/// Remote CZ between the two super-nodes: the shared graph becomes the
/// union of the two stars plus the edge between the supers, consuming
/// exactly one inter-QLAN EPR pair.
QlanNetwork merge_remote_cz(const QlanNetwork& net);

/// The two-coloring of the merged binary star from the proof of the merge
/// proposition: part1 = {super 1} + clients of QLAN 2, part2 = {super 2} +
/// clients of QLAN 1.
Bipartition recolored_parts(const QlanNetwork& net);

/// Resolve a QLAN label to its vertex id; throws UnknownLabelError.
VertexId lookup_vertex(const QlanNetwork& net, int qlan_id, QlanRole role,
                       int index);

}  // namespace qweave
