#include "qweave/graph.hpp"

#include <algorithm>
#include <deque>

namespace qweave {

namespace {

std::string role_name(QlanRole role) {
  return role == QlanRole::Super ? "super" : "client";
}

[[noreturn]] void throw_unknown_vertex(VertexId v) {
  throw UnknownVertexError("unknown vertex " + std::to_string(v.value));
}

}  // namespace

std::string QlanVertexLabel::to_string() const {
  return std::to_string(qlan_id) + "_" + role_name(role) + "_" +
         std::to_string(index);
}

void Graph::add_vertex(VertexId v, std::optional<QlanVertexLabel> label) {
  auto [it, inserted] = adjacency_.try_emplace(v);
  if (!inserted) {
    throw Error("duplicate vertex " + std::to_string(v.value));
  }
  it->second.label = std::move(label);
}

void Graph::add_edge(VertexId a, VertexId b) {
  if (a == b) {
    throw Error("self-loop at vertex " + std::to_string(a.value));
  }
  auto ia = adjacency_.find(a);
  auto ib = adjacency_.find(b);
  if (ia == adjacency_.end()) throw_unknown_vertex(a);
  if (ib == adjacency_.end()) throw_unknown_vertex(b);
  ia->second.adj.insert(b);
  ib->second.adj.insert(a);
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  auto it = adjacency_.find(a);
  return it != adjacency_.end() && it->second.adj.count(b) != 0;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [v, data] : adjacency_) twice += data.adj.size();
  return twice / 2;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, data] : adjacency_) out.push_back(v);
  return out;
}

std::set<VertexId> Graph::vertex_set() const {
  std::set<VertexId> out;
  for (const auto& [v, data] : adjacency_) out.insert(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (const auto& [v, data] : adjacency_) {
    for (VertexId w : data.adj) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;  // map order already lexicographic
}

const Graph::VertexData& Graph::at(VertexId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw_unknown_vertex(v);
  return it->second;
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
  return at(v).adj;
}

const std::optional<QlanVertexLabel>& Graph::label(VertexId v) const {
  return at(v).label;
}

std::string Graph::vertex_name(VertexId v) const {
  const auto& lbl = at(v).label;
  return lbl ? lbl->to_string() : std::to_string(v.value);
}

bool Graph::operator==(const Graph& other) const {
  if (adjacency_.size() != other.adjacency_.size()) return false;
  auto it = other.adjacency_.begin();
  for (const auto& [v, data] : adjacency_) {
    if (it->first != v || it->second.label != data.label ||
        it->second.adj != data.adj) {
      return false;
    }
    ++it;
  }
  return true;
}

bool graph_equal(const Graph& a, const Graph& b) { return a == b; }

std::set<VertexId> neighborhood(const Graph& g, VertexId i) {
  return g.neighbors(i);
}

Graph induced_subgraph(const Graph& g, const std::set<VertexId>& a) {
  Graph out;
  for (VertexId v : a) {
    out.add_vertex(v, g.label(v));  // throws for members outside g
  }
  for (VertexId v : a) {
    for (VertexId w : g.neighbors(v)) {
      if (v < w && a.count(w)) out.add_edge(v, w);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph out;
  auto verts = g.vertices();
  for (VertexId v : verts) out.add_vertex(v, g.label(v));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!g.has_edge(verts[i], verts[j])) out.add_edge(verts[i], verts[j]);
    }
  }
  return out;
}

Graph local_complement(const Graph& g, VertexId i) {
  const std::set<VertexId>& n_i = g.neighbors(i);  // validates i
  Graph out;
  for (VertexId v : g.vertices()) out.add_vertex(v, g.label(v));
  for (const auto& [a, b] : g.edges()) {
    bool inside = n_i.count(a) && n_i.count(b);
    if (!inside) out.add_edge(a, b);
  }
  for (auto ia = n_i.begin(); ia != n_i.end(); ++ia) {
    for (auto ib = std::next(ia); ib != n_i.end(); ++ib) {
      if (!g.has_edge(*ia, *ib)) out.add_edge(*ia, *ib);
    }
  }
  return out;
}

Graph delete_vertex(const Graph& g, VertexId i) {
  if (!g.has_vertex(i)) throw_unknown_vertex(i);
  Graph out;
  for (VertexId v : g.vertices()) {
    if (v != i) out.add_vertex(v, g.label(v));
  }
  for (const auto& [a, b] : g.edges()) {
    if (a != i && b != i) out.add_edge(a, b);
  }
  return out;
}

std::optional<Bipartition> two_coloring(const Graph& g) {
  std::map<VertexId, int> color;
  for (VertexId start : g.vertices()) {
    if (color.count(start)) continue;
    color[start] = 0;
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : g.neighbors(v)) {
        auto it = color.find(w);
        if (it == color.end()) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (it->second == color[v]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  Bipartition bp;
  for (const auto& [v, c] : color) {
    (c == 0 ? bp.part1 : bp.part2).insert(v);
  }
  if (bp.part2.empty() && bp.part1.size() >= 2) {
    VertexId moved = *bp.part1.rbegin();
    bp.part1.erase(moved);
    bp.part2.insert(moved);
  }
  return bp;
}

bool is_valid_bipartition(const Graph& g, const Bipartition& bp) {
  std::set<VertexId> seen;
  for (VertexId v : bp.part1) {
    if (!g.has_vertex(v) || !seen.insert(v).second) return false;
  }
  for (VertexId v : bp.part2) {
    if (!g.has_vertex(v) || !seen.insert(v).second) return false;
  }
  if (seen.size() != g.vertex_count()) return false;
  for (const auto& [a, b] : g.edges()) {
    bool same = (bp.part1.count(a) && bp.part1.count(b)) ||
                (bp.part2.count(a) && bp.part2.count(b));
    if (same) return false;
  }
  return true;
}

}  // namespace qweave
