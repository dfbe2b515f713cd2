#include "qweave/lc_orbit.hpp"

#include <deque>
#include <set>

#include "qweave/tableau.hpp"

namespace qweave {

namespace {

std::vector<Edge> edge_key(const Graph& g) { return g.edges(); }

}  // namespace

LcOrbit lc_orbit(const Graph& g, std::size_t cap) {
  if (g.vertex_count() > kOrbitVertexLimit) {
    throw SizeLimitError("graph exceeds the orbit vertex limit");
  }
  if (cap == 0) {
    throw OrbitCapError("orbit cap must be positive");
  }
  LcOrbit orbit;
  std::set<std::vector<Edge>> seen;
  std::deque<Graph> frontier;

  seen.insert(edge_key(g));
  orbit.graphs.push_back(g);
  frontier.push_back(g);

  const auto verts = g.vertices();
  while (!frontier.empty()) {
    Graph current = std::move(frontier.front());
    frontier.pop_front();
    for (VertexId v : verts) {
      if (current.degree(v) < 2) continue;  // tau is the identity there
      Graph next = local_complement(current, v);
      if (!seen.insert(edge_key(next)).second) continue;
      if (orbit.graphs.size() >= cap) {
        orbit.truncated = true;
        return orbit;
      }
      orbit.graphs.push_back(next);
      frontier.push_back(next);
    }
  }
  return orbit;
}

bool lc_equivalent(const Graph& g1, const Graph& g2, std::size_t cap) {
  if (g1.vertex_set() != g2.vertex_set()) return false;

  const auto target = edge_key(g2);
  if (edge_key(g1) == target) return true;

  if (g1.vertex_count() > kOrbitVertexLimit) {
    throw SizeLimitError("graph exceeds the orbit vertex limit");
  }
  std::set<std::vector<Edge>> seen;
  std::deque<Graph> frontier;
  seen.insert(edge_key(g1));
  frontier.push_back(g1);
  const auto verts = g1.vertices();

  while (!frontier.empty()) {
    Graph current = std::move(frontier.front());
    frontier.pop_front();
    for (VertexId v : verts) {
      if (current.degree(v) < 2) continue;
      Graph next = local_complement(current, v);
      auto key = edge_key(next);
      if (key == target) return true;
      if (!seen.insert(std::move(key)).second) continue;
      if (seen.size() >= cap) {
        throw OrbitCapError("orbit cap exceeded before deciding equivalence");
      }
      frontier.push_back(std::move(next));
    }
  }
  return false;
}

bool certify_measurement(const Graph& g, const MeasurementSpec& spec) {
  if (g.vertex_count() > kCertifyVertexLimit) {
    throw SizeLimitError("graph exceeds the certification limit");
  }
  MeasureResult engine = measure(g, spec);

  StabilizerTableau tableau = tableau_from_graph(g);
  for (const OutcomeBranch& branch :
       measure_pauli(tableau, spec.vertex, spec.basis)) {
    StabilizerTableau residual = discard_qubit(branch.tableau, spec.vertex);
    ExtractedGraph extracted = extract_graph(residual);
    if (!lc_equivalent(extracted.graph, engine.graph)) return false;
  }
  return true;
}

}  // namespace qweave
