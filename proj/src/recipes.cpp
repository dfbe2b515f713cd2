#include "qweave/recipes.hpp"

#include <algorithm>

namespace qweave {

namespace {

struct Orientation {
  const Qlan* dotted;   // measured-away side
  const Qlan* ddotted;  // target side
};

Orientation orient(const QlanNetwork& net, TargetSide side) {
  if (side == TargetSide::Right) return {&net.qlan1, &net.qlan2};
  return {&net.qlan2, &net.qlan1};
}

VertexId client_at(const Qlan& qlan, int index, const char* which) {
  if (index < 1 ||
      static_cast<std::size_t>(index) > qlan.client_vertices.size()) {
    throw InvalidParamsError(std::string(which) + "=" + std::to_string(index) +
                             " is out of range for QLAN " +
                             std::to_string(qlan.id));
  }
  return qlan.client_vertices[static_cast<std::size_t>(index) - 1];
}

struct Resolved {
  const Qlan& dot;
  const Qlan& ddot;
  std::optional<VertexId> j;  // spared / hub client in the dotted QLAN
  std::optional<VertexId> i;  // target / hub client in the ddotted QLAN
};

Resolved resolve(const QlanNetwork& net, RecipeKind kind,
                 const RecipeParams& params) {
  if (!net.merged()) {
    throw NotMergedError("recipes require a merged network");
  }
  Orientation o = orient(net, params.side);
  Resolved r{*o.dotted, *o.ddotted, std::nullopt, std::nullopt};

  if (requires_client_j(kind)) {
    if (!params.client_j) {
      throw InvalidParamsError(recipe_cli_name(kind) + " requires client-j");
    }
    r.j = client_at(r.dot, *params.client_j, "client-j");
  } else if (params.client_j) {
    throw InvalidParamsError(recipe_cli_name(kind) +
                             " does not take client-j");
  }
  if (requires_client_i(kind)) {
    if (!params.client_i) {
      throw InvalidParamsError(recipe_cli_name(kind) + " requires client-i");
    }
    r.i = client_at(r.ddot, *params.client_i, "client-i");
  } else if (params.client_i) {
    throw InvalidParamsError(recipe_cli_name(kind) +
                             " does not take client-i");
  }
  return r;
}

// Pauli-z on every dotted client except `spare`, in index order.
void push_z_on_dotted_clients(std::vector<MeasurementSpec>& out,
                              const Qlan& dot,
                              std::optional<VertexId> spare = {}) {
  for (VertexId c : dot.client_vertices) {
    if (spare && *spare == c) continue;
    out.push_back({c, PauliBasis::Z, std::nullopt});
  }
}

Graph star_on(VertexId center, const std::vector<VertexId>& leaves,
              const Graph& labels_from) {
  Graph g;
  g.add_vertex(center, labels_from.label(center));
  for (VertexId v : leaves) g.add_vertex(v, labels_from.label(v));
  for (VertexId v : leaves) g.add_edge(center, v);
  return g;
}

Graph complete_on(const std::vector<VertexId>& verts,
                  const Graph& labels_from) {
  Graph g;
  for (VertexId v : verts) g.add_vertex(v, labels_from.label(v));
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      g.add_edge(verts[a], verts[b]);
    }
  }
  return g;
}

std::vector<VertexId> clients_without(const Qlan& qlan,
                                      std::optional<VertexId> skip) {
  std::vector<VertexId> out;
  for (VertexId c : qlan.client_vertices) {
    if (skip && *skip == c) continue;
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string recipe_cli_name(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::HierarchicalPeerToPeer: return "p2p-hier";
    case RecipeKind::RoleDelegationI: return "role-del-1";
    case RecipeKind::ClientsHandOver: return "handover";
    case RecipeKind::PurePeerToPeer: return "p2p-pure";
    case RecipeKind::RoleDelegationII_Case1: return "role-del-2a";
    case RecipeKind::RoleDelegationII_Case2: return "role-del-2b";
    case RecipeKind::Extranet: return "extranet";
    case RecipeKind::DoubleRoleDelegation: return "double-role-del";
    case RecipeKind::StarRecenter: return "star-recenter";
  }
  throw Error("unknown recipe kind");
}

RecipeKind recipe_from_cli_name(const std::string& name) {
  for (RecipeKind kind : all_recipe_kinds()) {
    if (recipe_cli_name(kind) == name) return kind;
  }
  throw InvalidParamsError("unknown recipe '" + name + "'");
}

std::vector<RecipeKind> all_recipe_kinds() {
  return {
      RecipeKind::HierarchicalPeerToPeer,
      RecipeKind::RoleDelegationI,
      RecipeKind::ClientsHandOver,
      RecipeKind::PurePeerToPeer,
      RecipeKind::RoleDelegationII_Case1,
      RecipeKind::RoleDelegationII_Case2,
      RecipeKind::Extranet,
      RecipeKind::DoubleRoleDelegation,
      RecipeKind::StarRecenter,
  };
}

bool requires_client_j(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::PurePeerToPeer:
    case RecipeKind::RoleDelegationII_Case1:
    case RecipeKind::RoleDelegationII_Case2:
    case RecipeKind::DoubleRoleDelegation:
    case RecipeKind::StarRecenter:
      return true;
    default:
      return false;
  }
}

bool requires_client_i(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::RoleDelegationI:
    case RecipeKind::RoleDelegationII_Case1:
    case RecipeKind::DoubleRoleDelegation:
      return true;
    default:
      return false;
  }
}

std::vector<MeasurementSpec> plan(const QlanNetwork& net, RecipeKind kind,
                                  const RecipeParams& params) {
  Resolved r = resolve(net, kind, params);
  const VertexId dot_super = r.dot.super_vertex;
  const VertexId ddot_super = r.ddot.super_vertex;

  std::vector<MeasurementSpec> out;
  switch (kind) {
    case RecipeKind::HierarchicalPeerToPeer:
      // (n1-1) Pauli-z on the dotted clients, Pauli-y at the other super
      push_z_on_dotted_clients(out, r.dot);
      out.push_back({ddot_super, PauliBasis::Y, std::nullopt});
      break;
    case RecipeKind::RoleDelegationI:
      push_z_on_dotted_clients(out, r.dot);
      out.push_back({ddot_super, PauliBasis::X, r.i});
      break;
    case RecipeKind::ClientsHandOver:
      push_z_on_dotted_clients(out, r.dot);
      out.push_back({ddot_super, PauliBasis::X, dot_super});
      break;
    case RecipeKind::PurePeerToPeer:
      // (n1-2) Pauli-z sparing client j, then Pauli-y at both supers
      push_z_on_dotted_clients(out, r.dot, r.j);
      out.push_back({dot_super, PauliBasis::Y, std::nullopt});
      out.push_back({ddot_super, PauliBasis::Y, std::nullopt});
      break;
    case RecipeKind::RoleDelegationII_Case1:
      push_z_on_dotted_clients(out, r.dot, r.j);
      out.push_back({dot_super, PauliBasis::Y, std::nullopt});
      out.push_back({ddot_super, PauliBasis::X, r.i});
      break;
    case RecipeKind::RoleDelegationII_Case2:
      push_z_on_dotted_clients(out, r.dot, r.j);
      out.push_back({dot_super, PauliBasis::Y, std::nullopt});
      out.push_back({ddot_super, PauliBasis::X, r.j});
      break;
    case RecipeKind::Extranet:
      // Pauli-x at one super with k0 the other super, then Pauli-z there
      out.push_back({dot_super, PauliBasis::X, ddot_super});
      out.push_back({ddot_super, PauliBasis::Z, std::nullopt});
      break;
    case RecipeKind::DoubleRoleDelegation:
      out.push_back({dot_super, PauliBasis::X, r.j});
      out.push_back({ddot_super, PauliBasis::X, r.i});
      break;
    case RecipeKind::StarRecenter:
      out.push_back({dot_super, PauliBasis::X, r.j});
      break;
  }
  return out;
}

Graph expected_graph(const QlanNetwork& net, RecipeKind kind,
                     const RecipeParams& params) {
  Resolved r = resolve(net, kind, params);
  const Graph& shared = *net.shared_graph;
  const VertexId dot_super = r.dot.super_vertex;
  const VertexId ddot_super = r.ddot.super_vertex;
  const std::vector<VertexId>& ddot_clients = r.ddot.client_vertices;

  switch (kind) {
    case RecipeKind::HierarchicalPeerToPeer: {
      std::vector<VertexId> set{dot_super};
      set.insert(set.end(), ddot_clients.begin(), ddot_clients.end());
      return complete_on(set, shared);
    }
    case RecipeKind::RoleDelegationI: {
      std::vector<VertexId> leaves{dot_super};
      auto rest = clients_without(r.ddot, r.i);
      leaves.insert(leaves.end(), rest.begin(), rest.end());
      return star_on(*r.i, leaves, shared);
    }
    case RecipeKind::ClientsHandOver:
      return star_on(dot_super, ddot_clients, shared);
    case RecipeKind::PurePeerToPeer: {
      std::vector<VertexId> set{*r.j};
      set.insert(set.end(), ddot_clients.begin(), ddot_clients.end());
      return complete_on(set, shared);
    }
    case RecipeKind::RoleDelegationII_Case1: {
      std::vector<VertexId> leaves{*r.j};
      auto rest = clients_without(r.ddot, r.i);
      leaves.insert(leaves.end(), rest.begin(), rest.end());
      return star_on(*r.i, leaves, shared);
    }
    case RecipeKind::RoleDelegationII_Case2:
      return star_on(*r.j, ddot_clients, shared);
    case RecipeKind::Extranet: {
      Graph g;
      for (VertexId v : r.dot.client_vertices) g.add_vertex(v, shared.label(v));
      for (VertexId v : ddot_clients) g.add_vertex(v, shared.label(v));
      for (VertexId a : r.dot.client_vertices) {
        for (VertexId b : ddot_clients) g.add_edge(a, b);
      }
      return g;
    }
    case RecipeKind::DoubleRoleDelegation: {
      // Binary star on the clients: each hub keeps its own QLAN's other
      // clients as leaves and the hubs share an edge (the super-to-super
      // link survives the two delegations).
      Graph g;
      for (VertexId v : r.dot.client_vertices) g.add_vertex(v, shared.label(v));
      for (VertexId v : ddot_clients) g.add_vertex(v, shared.label(v));
      for (VertexId v : clients_without(r.dot, r.j)) g.add_edge(*r.j, v);
      for (VertexId v : clients_without(r.ddot, r.i)) g.add_edge(*r.i, v);
      g.add_edge(*r.j, *r.i);
      return g;
    }
    case RecipeKind::StarRecenter: {
      // The dotted star recentered at client j; the rest of the binary
      // star is untouched, and the new center inherits the inter-QLAN
      // edge from the measured super-node.
      Graph g;
      for (VertexId v : r.dot.client_vertices) g.add_vertex(v, shared.label(v));
      g.add_vertex(ddot_super, shared.label(ddot_super));
      for (VertexId v : ddot_clients) g.add_vertex(v, shared.label(v));
      for (VertexId v : clients_without(r.dot, r.j)) g.add_edge(*r.j, v);
      g.add_edge(*r.j, ddot_super);
      for (VertexId v : ddot_clients) g.add_edge(ddot_super, v);
      return g;
    }
  }
  throw Error("unknown recipe kind");
}

RecipeReport apply_recipe(const QlanNetwork& net, RecipeKind kind,
                          const RecipeParams& params) {
  RecipeReport report;
  report.kind = kind;
  report.params = params;
  report.plan = plan(net, kind, params);
  report.expected = expected_graph(net, kind, params);

  SequenceResult run = measure_sequence(*net.shared_graph, report.plan);
  report.result = std::move(run.graph);
  report.trace = std::move(run.trace);
  report.matched = graph_equal(report.result, report.expected);
  return report;
}

std::vector<MeasurementSpec> restrict_to_subset(
    const std::vector<MeasurementSpec>& plan, const Graph& expected,
    const std::set<VertexId>& keep) {
  if (keep.empty()) {
    throw InvalidParamsError("keep set must not be empty");
  }
  const auto target = expected.vertex_set();
  for (VertexId v : keep) {
    if (!target.count(v)) {
      throw InvalidParamsError("keep vertex " + std::to_string(v.value) +
                               " is outside the target set");
    }
  }
  std::vector<MeasurementSpec> out = plan;
  for (VertexId v : expected.vertices()) {
    if (!keep.count(v)) out.push_back({v, PauliBasis::Z, std::nullopt});
  }
  return out;
}

}  // namespace qweave
