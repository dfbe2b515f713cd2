#include "qweave/topology.hpp"

#include <string>

namespace qweave {

namespace {

Graph graph_on(const std::vector<VertexSpec>& vs) {
  Graph g;
  for (const auto& spec : vs) g.add_vertex(spec.id, spec.label);
  return g;
}

Graph graph_on(const std::vector<VertexSpec>& a,
               const std::vector<VertexSpec>& b) {
  Graph g;
  for (const auto& spec : a) g.add_vertex(spec.id, spec.label);
  for (const auto& spec : b) g.add_vertex(spec.id, spec.label);
  return g;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidTopologyError(message);
}

}  // namespace

std::vector<VertexSpec> default_vertex_specs(std::size_t n) {
  std::vector<VertexSpec> vs;
  vs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    vs.push_back({VertexId{static_cast<std::uint32_t>(k)}, std::nullopt});
  }
  return vs;
}

Graph make_path(const std::vector<VertexSpec>& vs) {
  require(!vs.empty(), "path needs a positive size");
  Graph g = graph_on(vs);
  for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
    g.add_edge(vs[k].id, vs[k + 1].id);
  }
  return g;
}

Graph make_even_cycle(const std::vector<VertexSpec>& vs) {
  require(vs.size() % 2 == 0, "cycle length must be even");
  require(vs.size() >= 4, "cycle needs at least 4 vertices");
  Graph g = graph_on(vs);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    g.add_edge(vs[k].id, vs[(k + 1) % vs.size()].id);
  }
  return g;
}

Graph make_star(const std::vector<VertexSpec>& vs) {
  require(!vs.empty(), "star needs a positive size");
  Graph g = graph_on(vs);
  for (std::size_t k = 1; k < vs.size(); ++k) {
    g.add_edge(vs[0].id, vs[k].id);
  }
  return g;
}

Graph make_binary_star(const std::vector<VertexSpec>& part1,
                       const std::vector<VertexSpec>& part2) {
  require(!part1.empty() && !part2.empty(),
          "binary star needs non-empty parts");
  Graph g = graph_on(part1, part2);
  // E = {v1_1} x P2 union P1 x {v2_1}
  for (const auto& spec : part2) g.add_edge(part1[0].id, spec.id);
  for (std::size_t k = 1; k < part1.size(); ++k) {
    g.add_edge(part1[k].id, part2[0].id);
  }
  return g;
}

Graph make_complete_bipartite(const std::vector<VertexSpec>& part1,
                              const std::vector<VertexSpec>& part2) {
  require(!part1.empty() && !part2.empty(),
          "complete bipartite needs non-empty parts");
  Graph g = graph_on(part1, part2);
  for (const auto& a : part1) {
    for (const auto& b : part2) g.add_edge(a.id, b.id);
  }
  return g;
}

Graph make_complete(const std::vector<VertexSpec>& vs) {
  require(!vs.empty(), "complete graph needs a positive size");
  Graph g = graph_on(vs);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      g.add_edge(vs[i].id, vs[j].id);
    }
  }
  return g;
}

Graph make_hypercube(std::size_t dim) {
  require(dim >= 1, "hypercube dimension must be positive");
  require(dim <= 16, "hypercube dimension too large");
  const std::size_t n = std::size_t{1} << dim;
  Graph g;
  for (std::size_t k = 0; k < n; ++k) {
    g.add_vertex(VertexId{static_cast<std::uint32_t>(k)});
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t b = 0; b < dim; ++b) {
      std::size_t m = k ^ (std::size_t{1} << b);
      if (k < m) {
        g.add_edge(VertexId{static_cast<std::uint32_t>(k)},
                   VertexId{static_cast<std::uint32_t>(m)});
      }
    }
  }
  return g;
}

Graph make_tree(const std::vector<std::size_t>& parents) {
  const std::size_t n = parents.size() + 1;
  Graph g;
  for (std::size_t k = 0; k < n; ++k) {
    g.add_vertex(VertexId{static_cast<std::uint32_t>(k)});
  }
  for (std::size_t k = 0; k < parents.size(); ++k) {
    std::size_t child = k + 1;
    require(parents[k] < child, "tree parent index must precede its child");
    g.add_edge(VertexId{static_cast<std::uint32_t>(parents[k])},
               VertexId{static_cast<std::uint32_t>(child)});
  }
  return g;
}

Graph make_topology(TopologyKind kind, const TopologyParams& params) {
  auto size_at = [&](std::size_t k) {
    require(params.sizes.size() > k, "missing size parameter");
    require(params.sizes[k] >= 1, "sizes must be positive");
    return params.sizes[k];
  };
  switch (kind) {
    case TopologyKind::Path:
      return make_path(default_vertex_specs(size_at(0)));
    case TopologyKind::EvenCycle:
      return make_even_cycle(default_vertex_specs(size_at(0)));
    case TopologyKind::Star:
      return make_star(default_vertex_specs(size_at(0)));
    case TopologyKind::BinaryStar: {
      std::size_t n1 = size_at(0);
      std::size_t n2 = size_at(1);
      auto all = default_vertex_specs(n1 + n2);
      std::vector<VertexSpec> p1(all.begin(), all.begin() + n1);
      std::vector<VertexSpec> p2(all.begin() + n1, all.end());
      return make_binary_star(p1, p2);
    }
    case TopologyKind::CompleteBipartite: {
      std::size_t n1 = size_at(0);
      std::size_t n2 = size_at(1);
      auto all = default_vertex_specs(n1 + n2);
      std::vector<VertexSpec> p1(all.begin(), all.begin() + n1);
      std::vector<VertexSpec> p2(all.begin() + n1, all.end());
      return make_complete_bipartite(p1, p2);
    }
    case TopologyKind::Complete:
      return make_complete(default_vertex_specs(size_at(0)));
    case TopologyKind::Hypercube:
      return make_hypercube(size_at(0));
    case TopologyKind::Tree:
      return make_tree(params.tree_parents);
  }
  throw InvalidTopologyError("unknown topology kind");
}

}  // namespace qweave
