#include <doctest.h>

#include "qweave/qlan.hpp"
#include "qweave/topology.hpp"

using namespace qweave;

namespace {

// the recolored binary star built directly from the two-coloring parts:
// part1 = {super1} + clients2, part2 = {super2} + clients1, hubs first
Graph expected_binary_star(const QlanNetwork& net) {
  std::vector<VertexSpec> part1{{net.qlan1.super_vertex,
                                 net.qlan1.state_graph.label(
                                     net.qlan1.super_vertex)}};
  for (VertexId c : net.qlan2.client_vertices) {
    part1.push_back({c, net.qlan2.state_graph.label(c)});
  }
  std::vector<VertexSpec> part2{{net.qlan2.super_vertex,
                                 net.qlan2.state_graph.label(
                                     net.qlan2.super_vertex)}};
  for (VertexId c : net.qlan1.client_vertices) {
    part2.push_back({c, net.qlan1.state_graph.label(c)});
  }
  return make_binary_star(part1, part2);
}

}  // namespace

TEST_CASE("build_qlan distributes a star and counts EPR pairs") {
  ResourceLedger ledger;
  Qlan q = build_qlan(1, 4, ledger);
  CHECK(q.size() == 4);
  CHECK(ledger.epr_generated == 3);
  CHECK(ledger.epr_consumed_intra == 3);
  CHECK(ledger.epr_consumed_inter == 0);
  CHECK(q.state_graph.edge_count() == 3);
  for (VertexId c : q.client_vertices) {
    CHECK(q.state_graph.has_edge(q.super_vertex, c));
    CHECK(q.state_graph.degree(c) == 1);
  }
  CHECK(q.state_graph.label(q.super_vertex) ==
        QlanVertexLabel{1, QlanRole::Super, 1});

  ResourceLedger l1;
  Qlan single = build_qlan(2, 1, l1);
  CHECK(single.size() == 1);
  CHECK(single.state_graph.edge_count() == 0);
  CHECK(l1.epr_consumed_intra == 0);

  ResourceLedger l2;
  Qlan pair = build_qlan(1, 2, l2);
  CHECK(pair.state_graph.edge_count() == 1);
  CHECK(l2.epr_consumed_intra == 1);

  ResourceLedger l3;
  CHECK_THROWS_AS(build_qlan(1, 0, l3), InvalidTopologyError);
}

TEST_CASE("merge adds one edge for one inter-QLAN EPR pair") {
  QlanNetwork net = build_network(3, 3);
  CHECK_FALSE(net.merged());
  CHECK(net.ledger.epr_consumed_intra == 4);

  QlanNetwork merged = merge_remote_cz(net);
  REQUIRE(merged.merged());
  CHECK(merged.ledger.epr_consumed_inter == 1);
  CHECK(merged.ledger.epr_consumed_intra == 4);
  CHECK(merged.shared_graph->vertex_count() == 6);
  CHECK(merged.shared_graph->edge_count() == 5);
  CHECK(merged.shared_graph->has_edge(merged.qlan1.super_vertex,
                                      merged.qlan2.super_vertex));
  CHECK(graph_equal(*merged.shared_graph, expected_binary_star(merged)));

  CHECK_THROWS_AS(merge_remote_cz(merged), AlreadyMergedError);
}

TEST_CASE("degenerate single-node QLANs merge into one edge") {
  QlanNetwork merged = merge_remote_cz(build_network(1, 1));
  CHECK(merged.shared_graph->vertex_count() == 2);
  CHECK(merged.shared_graph->edge_count() == 1);
  CHECK(merged.ledger.epr_consumed_intra == 0);
  CHECK(merged.ledger.epr_consumed_inter == 1);
}

TEST_CASE("merged graph matches the binary star over the whole grid") {
  for (std::size_t n1 = 1; n1 <= 6; ++n1) {
    for (std::size_t n2 = 1; n2 <= 6; ++n2) {
      QlanNetwork merged = merge_remote_cz(build_network(n1, n2));
      CHECK(graph_equal(*merged.shared_graph, expected_binary_star(merged)));
      CHECK(merged.ledger.epr_consumed_inter == 1);
      CHECK(merged.ledger.epr_consumed_intra == (n1 - 1) + (n2 - 1));

      // degree profile: each super connects to its clients plus the other
      // super; every client stays degree 1
      CHECK(merged.shared_graph->degree(merged.qlan1.super_vertex) == n1);
      CHECK(merged.shared_graph->degree(merged.qlan2.super_vertex) == n2);
      for (VertexId c : merged.qlan1.client_vertices) {
        CHECK(merged.shared_graph->degree(c) == 1);
      }
      for (VertexId c : merged.qlan2.client_vertices) {
        CHECK(merged.shared_graph->degree(c) == 1);
      }
    }
  }
}

TEST_CASE("recolored parts follow the merge proof") {
  QlanNetwork merged = merge_remote_cz(build_network(3, 3));
  Bipartition bp = recolored_parts(merged);
  CHECK(bp.part1 == std::set<VertexId>{merged.qlan1.super_vertex,
                                       merged.qlan2.client_vertices[0],
                                       merged.qlan2.client_vertices[1]});
  CHECK(bp.part2 == std::set<VertexId>{merged.qlan2.super_vertex,
                                       merged.qlan1.client_vertices[0],
                                       merged.qlan1.client_vertices[1]});
  CHECK(is_valid_bipartition(*merged.shared_graph, bp));

  QlanNetwork tiny = merge_remote_cz(build_network(1, 1));
  Bipartition tiny_bp = recolored_parts(tiny);
  CHECK(tiny_bp.part1 == std::set<VertexId>{tiny.qlan1.super_vertex});
  CHECK(tiny_bp.part2 == std::set<VertexId>{tiny.qlan2.super_vertex});

  CHECK_THROWS_AS(recolored_parts(build_network(2, 2)), NotMergedError);
}

TEST_CASE("recolored parts validate for every size") {
  for (std::size_t n1 = 1; n1 <= 5; ++n1) {
    for (std::size_t n2 = 1; n2 <= 5; ++n2) {
      QlanNetwork merged = merge_remote_cz(build_network(n1, n2));
      CHECK(is_valid_bipartition(*merged.shared_graph,
                                 recolored_parts(merged)));
    }
  }
}

TEST_CASE("deleting one QLAN's clients leaves a recentered star") {
  // dropping every client of QLAN 1 from the merged binary star leaves
  // the star on part1 centered at QLAN 2's super-node
  QlanNetwork net = merge_remote_cz(build_network(4, 3));
  Graph g = *net.shared_graph;
  for (VertexId c : net.qlan1.client_vertices) g = delete_vertex(g, c);

  std::vector<VertexSpec> specs{{net.qlan2.super_vertex,
                                 g.label(net.qlan2.super_vertex)}};
  specs.push_back({net.qlan1.super_vertex, g.label(net.qlan1.super_vertex)});
  for (VertexId c : net.qlan2.client_vertices) {
    specs.push_back({c, g.label(c)});
  }
  CHECK(graph_equal(g, make_star(specs)));
}

TEST_CASE("label lookup") {
  QlanNetwork net = build_network(3, 4);
  CHECK(lookup_vertex(net, 1, QlanRole::Super, 1) == net.qlan1.super_vertex);
  CHECK(lookup_vertex(net, 2, QlanRole::Client, 2) ==
        net.qlan2.client_vertices[1]);
  CHECK_THROWS_AS(lookup_vertex(net, 3, QlanRole::Super, 1),
                  UnknownLabelError);
  CHECK_THROWS_AS(lookup_vertex(net, 1, QlanRole::Client, 3),
                  UnknownLabelError);
  CHECK_THROWS_AS(lookup_vertex(net, 1, QlanRole::Super, 2),
                  UnknownLabelError);
}
