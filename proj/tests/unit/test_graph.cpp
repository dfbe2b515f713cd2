#include <doctest.h>

#include <random>

#include "qweave/graph.hpp"
#include "qweave/topology.hpp"

using namespace qweave;

namespace {

VertexId v(std::uint32_t n) { return VertexId{n}; }

Graph path3() {
  Graph g;
  g.add_vertex(v(1));
  g.add_vertex(v(2));
  g.add_vertex(v(3));
  g.add_edge(v(1), v(2));
  g.add_edge(v(2), v(3));
  return g;
}

Graph triangle() {
  Graph g;
  g.add_vertex(v(1));
  g.add_vertex(v(2));
  g.add_vertex(v(3));
  g.add_edge(v(1), v(2));
  g.add_edge(v(2), v(3));
  g.add_edge(v(1), v(3));
  return g;
}

Graph random_graph(std::mt19937& rng, std::size_t n, double p = 0.4) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g;
  for (std::size_t k = 0; k < n; ++k) g.add_vertex(v(k));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng) < p) g.add_edge(v(a), v(b));
    }
  }
  return g;
}

// test-only oracle: exhaustive 2-coloring search
bool brute_force_two_colorable(const Graph& g) {
  auto verts = g.vertices();
  const std::size_t n = verts.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (const auto& [a, b] : g.edges()) {
      std::size_t ia = 0, ib = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (verts[k] == a) ia = k;
        if (verts[k] == b) ib = k;
      }
      if (((mask >> ia) & 1) == ((mask >> ib) & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return n == 0;
}

}  // namespace

TEST_CASE("neighborhood basics") {
  Graph s4 = make_star({{v(10), {}}, {v(1), {}}, {v(2), {}}, {v(3), {}}});
  CHECK(neighborhood(s4, v(10)) == std::set<VertexId>{v(1), v(2), v(3)});
  CHECK(neighborhood(s4, v(1)) == std::set<VertexId>{v(10)});

  Graph p = path3();
  CHECK(neighborhood(p, v(2)) == std::set<VertexId>{v(1), v(3)});

  Graph isolated;
  isolated.add_vertex(v(7));
  CHECK(neighborhood(isolated, v(7)).empty());

  CHECK_THROWS_AS(neighborhood(p, v(99)), UnknownVertexError);
}

TEST_CASE("induced subgraph") {
  Graph k3 = triangle();
  Graph sub = induced_subgraph(k3, {v(1), v(2)});
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.edge_count() == 1);
  CHECK(sub.has_edge(v(1), v(2)));

  Graph s4 = make_star({{v(0), {}}, {v(1), {}}, {v(2), {}}, {v(3), {}}});
  Graph leaves = induced_subgraph(s4, {v(1), v(2), v(3)});
  CHECK(leaves.vertex_count() == 3);
  CHECK(leaves.edge_count() == 0);

  CHECK(graph_equal(induced_subgraph(k3, k3.vertex_set()), k3));
  CHECK_THROWS_AS(induced_subgraph(k3, {v(1), v(42)}), UnknownVertexError);
}

TEST_CASE("complement") {
  Graph empty3;
  empty3.add_vertex(v(1));
  empty3.add_vertex(v(2));
  empty3.add_vertex(v(3));
  CHECK(graph_equal(complement(empty3), triangle()));
  CHECK(graph_equal(complement(triangle()), empty3));

  Graph pc = complement(path3());
  CHECK(pc.edge_count() == 1);
  CHECK(pc.has_edge(v(1), v(3)));
}

TEST_CASE("complement is an involution") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    Graph g = random_graph(rng, 1 + rep % 9);
    CHECK(graph_equal(complement(complement(g)), g));
  }
}

TEST_CASE("local complement") {
  CHECK(graph_equal(local_complement(path3(), v(2)), triangle()));

  // star center -> complete graph on all vertices
  Graph s5 = make_star(default_vertex_specs(5));
  Graph k5 = make_complete(default_vertex_specs(5));
  CHECK(graph_equal(local_complement(s5, v(0)), k5));

  // degree <= 1 leaves the graph unchanged
  CHECK(graph_equal(local_complement(path3(), v(1)), path3()));
  Graph iso;
  iso.add_vertex(v(5));
  CHECK(graph_equal(local_complement(iso, v(5)), iso));

  CHECK_THROWS_AS(local_complement(path3(), v(9)), UnknownVertexError);
}

TEST_CASE("local complement properties") {
  std::mt19937 rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    Graph g = random_graph(rng, 2 + rep % 8);
    auto verts = g.vertices();
    VertexId i = verts[rep % verts.size()];
    Graph t = local_complement(g, i);
    CHECK(graph_equal(local_complement(t, i), g));  // involution
    CHECK(t.neighbors(i) == g.neighbors(i));        // N_i untouched
    CHECK(t.vertex_count() == g.vertex_count());
  }
}

TEST_CASE("delete vertex") {
  Graph after = delete_vertex(triangle(), v(3));
  CHECK(after.vertex_count() == 2);
  CHECK(after.edge_count() == 1);
  CHECK(after.has_edge(v(1), v(2)));

  Graph two = delete_vertex(delete_vertex(path3(), v(1)), v(3));
  CHECK(two.vertex_count() == 1);
  CHECK(two.edge_count() == 0);

  CHECK_THROWS_AS(delete_vertex(triangle(), v(9)), UnknownVertexError);
}

TEST_CASE("deletion removes exactly deg(i) edges") {
  std::mt19937 rng(13);
  for (int rep = 0; rep < 300; ++rep) {
    Graph g = random_graph(rng, 2 + rep % 9);
    auto verts = g.vertices();
    VertexId i = verts[rep % verts.size()];
    Graph d = delete_vertex(g, i);
    CHECK(d.vertex_count() == g.vertex_count() - 1);
    CHECK(d.edge_count() == g.edge_count() - g.degree(i));
  }
}

TEST_CASE("two-coloring witnesses") {
  CHECK_FALSE(two_coloring(triangle()).has_value());

  auto pc = two_coloring(path3());
  REQUIRE(pc.has_value());
  CHECK(is_valid_bipartition(path3(), *pc));
  CHECK(pc->part1.count(v(1)) == 1);  // smallest id in part1

  Graph q3 = make_hypercube(3);
  auto qc = two_coloring(q3);
  REQUIRE(qc.has_value());
  CHECK(is_valid_bipartition(q3, *qc));

  // edgeless graphs still get two non-empty parts
  Graph e2;
  e2.add_vertex(v(4));
  e2.add_vertex(v(9));
  auto ec = two_coloring(e2);
  REQUIRE(ec.has_value());
  CHECK(ec->part1 == std::set<VertexId>{v(4)});
  CHECK(ec->part2 == std::set<VertexId>{v(9)});
}

TEST_CASE("two-coloring agrees with brute force") {
  std::mt19937 rng(17);
  for (int rep = 0; rep < 400; ++rep) {
    Graph g = random_graph(rng, 1 + rep % 8, 0.35);
    auto witness = two_coloring(g);
    CHECK(witness.has_value() == brute_force_two_colorable(g));
    if (witness) CHECK(is_valid_bipartition(g, *witness));
  }
  // determinism
  Graph g = random_graph(rng, 8, 0.3);
  auto a = two_coloring(g);
  auto b = two_coloring(g);
  REQUIRE(a.has_value() == b.has_value());
  if (a) CHECK(*a == *b);
}

TEST_CASE("graph equality is labeled, not isomorphism") {
  CHECK(graph_equal(path3(), path3()));
  CHECK_FALSE(graph_equal(path3(), triangle()));

  // same edges inserted in different order compare equal
  Graph a;
  a.add_vertex(v(1));
  a.add_vertex(v(2));
  a.add_vertex(v(3));
  a.add_edge(v(2), v(3));
  a.add_edge(v(1), v(2));
  CHECK(graph_equal(a, path3()));

  // same shape, different labels -> different graphs
  Graph labeled;
  labeled.add_vertex(v(1), QlanVertexLabel{1, QlanRole::Super, 1});
  labeled.add_vertex(v(2));
  labeled.add_vertex(v(3));
  labeled.add_edge(v(1), v(2));
  labeled.add_edge(v(2), v(3));
  CHECK_FALSE(graph_equal(labeled, path3()));
}

TEST_CASE("simple-graph invariants are enforced") {
  Graph g;
  g.add_vertex(v(1));
  g.add_vertex(v(2));
  CHECK_THROWS_AS(g.add_edge(v(1), v(1)), Error);
  g.add_edge(v(1), v(2));
  g.add_edge(v(1), v(2));  // duplicate insert is a no-op
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_vertex(v(1)), Error);
}
