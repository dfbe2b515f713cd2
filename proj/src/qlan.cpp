#include "qweave/qlan.hpp"

#include <string>

#include "qweave/topology.hpp"

namespace qweave {

VertexId qlan_vertex_id(int qlan_id, QlanRole role, int index) {
  const std::uint32_t base = static_cast<std::uint32_t>(qlan_id) * 256u;
  if (role == QlanRole::Super) return VertexId{base};
  return VertexId{base + static_cast<std::uint32_t>(index)};
}

Qlan build_qlan(int id, std::size_t n, ResourceLedger& ledger) {
  if (n < 1) {
    throw InvalidTopologyError("a QLAN needs at least its super-node");
  }
  if (n > kQlanNodeLimit) {
    throw SizeLimitError("QLAN size exceeds the node limit");
  }

  std::vector<VertexSpec> specs;
  specs.reserve(n);
  specs.push_back({qlan_vertex_id(id, QlanRole::Super, 1),
                   QlanVertexLabel{id, QlanRole::Super, 1}});
  for (std::size_t k = 1; k < n; ++k) {
    const int index = static_cast<int>(k);
    specs.push_back({qlan_vertex_id(id, QlanRole::Client, index),
                     QlanVertexLabel{id, QlanRole::Client, index}});
  }

  Qlan qlan;
  qlan.id = id;
  qlan.super_vertex = specs.front().id;
  for (std::size_t k = 1; k < n; ++k) {
    qlan.client_vertices.push_back(specs[k].id);
  }
  qlan.state_graph = make_star(specs);

  // one EPR pair per client, generated at the super-node and consumed by
  // the teleportation step
  ledger.epr_generated += n - 1;
  ledger.epr_consumed_intra += n - 1;
  return qlan;
}

QlanNetwork build_network(std::size_t n1, std::size_t n2) {
  QlanNetwork net;
  net.qlan1 = build_qlan(1, n1, net.ledger);
  net.qlan2 = build_qlan(2, n2, net.ledger);
  return net;
}

QlanNetwork merge_remote_cz(const QlanNetwork& net) {
  if (net.merged()) {
    throw AlreadyMergedError("the network is already merged");
  }
  QlanNetwork out = net;

  Graph shared;
  for (const Qlan* q : {&net.qlan1, &net.qlan2}) {
    for (VertexId v : q->state_graph.vertices()) {
      shared.add_vertex(v, q->state_graph.label(v));
    }
    for (const auto& [a, b] : q->state_graph.edges()) {
      shared.add_edge(a, b);
    }
  }
  shared.add_edge(net.qlan1.super_vertex, net.qlan2.super_vertex);

  out.shared_graph = std::move(shared);
  out.ledger.epr_generated += 1;
  out.ledger.epr_consumed_inter += 1;
  return out;
}

Bipartition recolored_parts(const QlanNetwork& net) {
  if (!net.merged()) {
    throw NotMergedError("the network has not been merged yet");
  }
  Bipartition bp;
  bp.part1.insert(net.qlan1.super_vertex);
  for (VertexId v : net.qlan2.client_vertices) bp.part1.insert(v);
  bp.part2.insert(net.qlan2.super_vertex);
  for (VertexId v : net.qlan1.client_vertices) bp.part2.insert(v);
  return bp;
}

VertexId lookup_vertex(const QlanNetwork& net, int qlan_id, QlanRole role,
                       int index) {
  const Qlan* qlan = nullptr;
  if (qlan_id == net.qlan1.id) qlan = &net.qlan1;
  if (qlan_id == net.qlan2.id) qlan = &net.qlan2;
  if (qlan == nullptr) {
    throw UnknownLabelError("no QLAN with id " + std::to_string(qlan_id));
  }
  if (role == QlanRole::Super) {
    if (index != 1) {
      throw UnknownLabelError("super-node index must be 1");
    }
    return qlan->super_vertex;
  }
  if (index < 1 ||
      static_cast<std::size_t>(index) > qlan->client_vertices.size()) {
    throw UnknownLabelError("QLAN " + std::to_string(qlan_id) +
                            " has no client " + std::to_string(index));
  }
  return qlan->client_vertices[static_cast<std::size_t>(index) - 1];
}

}  // namespace qweave
