#include <doctest.h>

#include <random>

#include "qweave/lc_orbit.hpp"
#include "qweave/topology.hpp"
#include "qweave/verify.hpp"

using namespace qweave;

namespace {
VertexId v(std::uint32_t n) { return VertexId{n}; }
}  // namespace

TEST_CASE("orbit of a 3-star is the three stars plus the triangle") {
  Graph s3 = make_star({{v(1), {}}, {v(2), {}}, {v(3), {}}});
  LcOrbit orbit = lc_orbit(s3);
  CHECK_FALSE(orbit.truncated);
  REQUIRE(orbit.graphs.size() == 4);

  std::set<std::vector<Edge>> keys;
  for (const Graph& g : orbit.graphs) keys.insert(g.edges());
  Graph k3 = make_complete({{v(1), {}}, {v(2), {}}, {v(3), {}}});
  CHECK(keys.count(k3.edges()) == 1);
  for (std::uint32_t center : {1u, 2u, 3u}) {
    std::vector<VertexSpec> specs{{v(center), {}}};
    for (std::uint32_t leaf : {1u, 2u, 3u}) {
      if (leaf != center) specs.push_back({v(leaf), {}});
    }
    CHECK(keys.count(make_star(specs).edges()) == 1);
  }
}

TEST_CASE("degree-one and empty graphs are orbit fixed points") {
  Graph k2 = make_path({{v(1), {}}, {v(2), {}}});
  LcOrbit o2 = lc_orbit(k2);
  CHECK(o2.graphs.size() == 1);

  Graph empty;
  empty.add_vertex(v(1));
  empty.add_vertex(v(2));
  LcOrbit oe = lc_orbit(empty);
  CHECK(oe.graphs.size() == 1);
}

TEST_CASE("lc equivalence examples") {
  Graph s3 = make_star({{v(1), {}}, {v(2), {}}, {v(3), {}}});
  Graph k3 = make_complete({{v(1), {}}, {v(2), {}}, {v(3), {}}});
  CHECK(lc_equivalent(s3, k3));
  CHECK(lc_equivalent(k3, s3));

  Graph edge = make_path({{v(1), {}}, {v(2), {}}});
  Graph empty;
  empty.add_vertex(v(1));
  empty.add_vertex(v(2));
  CHECK_FALSE(lc_equivalent(edge, empty));

  Graph p4 = make_path(default_vertex_specs(4));
  Graph s4 = make_star(default_vertex_specs(4));
  CHECK_FALSE(lc_equivalent(p4, s4));

  // different vertex sets are never equivalent
  Graph other = make_star({{v(7), {}}, {v(8), {}}, {v(9), {}}});
  CHECK_FALSE(lc_equivalent(s3, other));
}

TEST_CASE("lc equivalence behaves like an equivalence relation") {
  std::mt19937 rng(59);
  for (int rep = 0; rep < 40; ++rep) {
    std::size_t n = 2 + rep % 5;
    Graph g = graph_from_edge_mask(n, rng() % edge_mask_count(n));
    CHECK(lc_equivalent(g, g));  // reflexive

    // symmetric and transitive along random tau chains
    Graph h = g;
    for (int hop = 0; hop < 3; ++hop) {
      auto verts = h.vertices();
      h = local_complement(h, verts[rng() % verts.size()]);
    }
    CHECK(lc_equivalent(g, h));
    CHECK(lc_equivalent(h, g));
  }
}

TEST_CASE("caps are honored") {
  Graph s4 = make_star(default_vertex_specs(4));
  LcOrbit truncated = lc_orbit(s4, 2);
  CHECK(truncated.truncated);
  CHECK(truncated.graphs.size() == 2);

  Graph k4 = make_complete(default_vertex_specs(4));
  CHECK_THROWS_AS(lc_equivalent(s4, complement(s4), 2), OrbitCapError);
  // found-before-cap still succeeds
  CHECK(lc_equivalent(s4, k4, 3));
}

TEST_CASE("orbit vertex limit") {
  Graph big = make_star(default_vertex_specs(11));
  CHECK_THROWS_AS(lc_orbit(big), SizeLimitError);
}

TEST_CASE("certify single measurements against the oracle") {
  // Y at the center of S4 leaves a residual LC-equivalent to K3
  Graph s4 = make_star(default_vertex_specs(4));
  CHECK(certify_measurement(s4, {v(0), PauliBasis::Y, {}}));

  // exhaustive Z certification over every graph with up to 4 vertices
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < edge_mask_count(n); ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      for (std::size_t q = 0; q < n; ++q) {
        CHECK(certify_measurement(
            g, {v(static_cast<std::uint32_t>(q)), PauliBasis::Z, {}}));
      }
    }
  }

  // X at the part-1 hub of the binary star with k0 the part-2 hub
  auto all = default_vertex_specs(6);
  Graph bs = make_binary_star({all[0], all[1], all[2]},
                              {all[3], all[4], all[5]});
  CHECK(certify_measurement(bs, {v(0), PauliBasis::X, v(3)}));
}

TEST_CASE("x-measurement outputs for different k0 are lc-equivalent") {
  std::mt19937 rng(61);
  for (int rep = 0; rep < 60; ++rep) {
    std::size_t n = 3 + rep % 4;
    Graph g = graph_from_edge_mask(n, rng() % edge_mask_count(n));
    for (VertexId i : g.vertices()) {
      const auto& nbrs = g.neighbors(i);
      if (nbrs.size() < 2) continue;
      Graph first =
          measure(g, {i, PauliBasis::X, *nbrs.begin()}).graph;
      for (VertexId k0 : nbrs) {
        Graph other = measure(g, {i, PauliBasis::X, k0}).graph;
        CHECK(lc_equivalent(first, other));
      }
    }
  }

  // sampled up at n = 7 and 8, where exhaustion is out of reach
  for (int rep = 0; rep < 30; ++rep) {
    std::size_t n = 7 + rep % 2;
    std::uint64_t mask = (static_cast<std::uint64_t>(rng()) << 32 | rng()) %
                         edge_mask_count(n);
    Graph g = graph_from_edge_mask(n, mask);
    auto verts = g.vertices();
    VertexId i = verts[rng() % verts.size()];
    const auto& nbrs = g.neighbors(i);
    if (nbrs.size() < 2) continue;
    Graph first = measure(g, {i, PauliBasis::X, *nbrs.begin()}).graph;
    for (VertexId k0 : nbrs) {
      CHECK(lc_equivalent(first, measure(g, {i, PauliBasis::X, k0}).graph));
    }
  }
}
