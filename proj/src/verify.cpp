#include "qweave/verify.hpp"

#include <deque>
#include <optional>

namespace qweave {

Graph graph_from_edge_mask(std::size_t n, std::uint64_t edge_mask) {
  Graph g;
  for (std::size_t v = 0; v < n; ++v) {
    g.add_vertex(VertexId{static_cast<std::uint32_t>(v)});
  }
  std::size_t bit = 0;
  for (std::size_t b = 1; b < n; ++b) {
    for (std::size_t a = 0; a < b; ++a, ++bit) {
      if ((edge_mask >> bit) & 1) {
        g.add_edge(VertexId{static_cast<std::uint32_t>(a)},
                   VertexId{static_cast<std::uint32_t>(b)});
      }
    }
  }
  return g;
}

std::uint64_t edge_mask_count(std::size_t n) {
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Json certify_case_to_json(const CertifyCase& c) {
  Json j;
  j["graph"] = graph_to_json(c.graph);
  j["spec"] = spec_to_json(c.spec);
  j["branches"] = c.branches;
  j["lc_equivalent"] = c.lc_equivalent;
  j["orbit_size"] = c.orbit_size;
  return j;
}

CertifyCase certify_case(const Graph& g, const MeasurementSpec& spec) {
  CertifyCase out;
  out.graph = g;
  out.spec = spec;

  MeasureResult engine = measure(g, spec);
  LcOrbit orbit = lc_orbit(engine.graph);
  out.orbit_size = orbit.graphs.size();

  std::set<std::vector<Edge>> orbit_keys;
  for (const Graph& member : orbit.graphs) orbit_keys.insert(member.edges());

  out.lc_equivalent = true;
  StabilizerTableau tableau = tableau_from_graph(g);
  for (const OutcomeBranch& branch :
       measure_pauli(tableau, spec.vertex, spec.basis)) {
    ++out.branches;
    StabilizerTableau residual = discard_qubit(branch.tableau, spec.vertex);
    ExtractedGraph extracted = extract_graph(residual);
    if (extracted.graph.vertex_set() != engine.graph.vertex_set() ||
        !orbit_keys.count(extracted.graph.edges())) {
      out.lc_equivalent = false;
    }
  }
  return out;
}

ExhaustiveCertifyResult exhaustive_certify(std::size_t n_max,
                                           bool collect_records) {
  ExhaustiveCertifyResult result;
  result.graphs_per_n.assign(n_max, 0);
  result.cases_per_n.assign(n_max, 0);

  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::uint64_t masks = edge_mask_count(n);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      ++result.graphs;
      ++result.graphs_per_n[n - 1];
      for (std::size_t v = 0; v < n; ++v) {
        for (PauliBasis basis :
             {PauliBasis::X, PauliBasis::Y, PauliBasis::Z}) {
          MeasurementSpec spec{VertexId{static_cast<std::uint32_t>(v)}, basis,
                               std::nullopt};
          ++result.cases;
          ++result.cases_per_n[n - 1];
          if (collect_records) {
            CertifyCase record = certify_case(g, spec);
            if (!record.lc_equivalent) ++result.failures;
            result.records.push_back(std::move(record));
          } else if (!certify_measurement(g, spec)) {
            ++result.failures;
          }
        }
      }
    }
  }
  return result;
}

Json grid_case_to_json(const GridCase& c) {
  Json j;
  j["n1"] = c.n1;
  j["n2"] = c.n2;
  j["kind"] = recipe_cli_name(c.kind);
  j["side"] = c.params.side == TargetSide::Left ? "left" : "right";
  j["client_j"] = c.params.client_j ? Json(*c.params.client_j) : Json(nullptr);
  j["client_i"] = c.params.client_i ? Json(*c.params.client_i) : Json(nullptr);
  j["matched"] = c.matched;
  return j;
}

std::vector<RecipeParams> valid_param_grid(const QlanNetwork& net,
                                           RecipeKind kind) {
  std::vector<RecipeParams> out;
  for (TargetSide side : {TargetSide::Right, TargetSide::Left}) {
    const Qlan& dot = side == TargetSide::Right ? net.qlan1 : net.qlan2;
    const Qlan& ddot = side == TargetSide::Right ? net.qlan2 : net.qlan1;

    std::vector<std::optional<int>> j_choices{std::nullopt};
    if (requires_client_j(kind)) {
      j_choices.clear();
      for (std::size_t k = 1; k <= dot.client_vertices.size(); ++k) {
        j_choices.push_back(static_cast<int>(k));
      }
    }
    std::vector<std::optional<int>> i_choices{std::nullopt};
    if (requires_client_i(kind)) {
      i_choices.clear();
      for (std::size_t k = 1; k <= ddot.client_vertices.size(); ++k) {
        i_choices.push_back(static_cast<int>(k));
      }
    }
    for (const auto& j : j_choices) {
      for (const auto& i : i_choices) {
        out.push_back(RecipeParams{side, j, i});
      }
    }
  }
  return out;
}

void apply_tau_correction(StabilizerTableau& t, VertexId a,
                          const std::set<VertexId>& neighbors) {
  t.apply_sx(t.qubit_of(a));
  for (VertexId b : neighbors) t.apply_sdg(t.qubit_of(b));
}

namespace {

// breadth-first tau path from h to target over the shared vertex set
std::optional<std::vector<VertexId>> tau_path(const Graph& h,
                                              const Graph& target) {
  if (h.vertex_set() != target.vertex_set()) return std::nullopt;
  const auto target_key = target.edges();
  if (h.edges() == target_key) return std::vector<VertexId>{};

  struct Node {
    Graph graph;
    std::vector<VertexId> path;
  };
  std::map<std::vector<Edge>, bool> seen;
  std::deque<Node> frontier;
  seen[h.edges()] = true;
  frontier.push_back({h, {}});
  const auto verts = h.vertices();

  while (!frontier.empty()) {
    Node node = std::move(frontier.front());
    frontier.pop_front();
    for (VertexId v : verts) {
      if (node.graph.degree(v) < 2) continue;
      Graph next = local_complement(node.graph, v);
      auto key = next.edges();
      if (seen.count(key)) continue;
      seen[key] = true;
      std::vector<VertexId> path = node.path;
      path.push_back(v);
      if (key == target_key) return path;
      frontier.push_back({std::move(next), std::move(path)});
    }
  }
  return std::nullopt;  // not LC-equivalent
}

void run_corrected_branches(const StabilizerTableau& tableau,
                            const Graph& frame,
                            const std::vector<MeasurementSpec>& specs,
                            std::size_t step, SequenceCertification& out) {
  if (step == specs.size()) {
    ++out.leaves;
    return;
  }
  const MeasurementSpec& spec = specs[step];
  const Graph next = measure(frame, spec).graph;

  for (const OutcomeBranch& branch :
       measure_pauli(tableau, spec.vertex, spec.basis)) {
    StabilizerTableau residual = discard_qubit(branch.tableau, spec.vertex);
    ExtractedGraph extracted = extract_graph(residual);

    auto path = tau_path(extracted.graph, next);
    if (!path) {
      out.certified = false;
      ++out.leaves;
      continue;
    }
    // replay the extraction record, then walk the tau path, so the state
    // becomes exactly |next>
    StabilizerTableau aligned = residual;
    for (const auto& [vertex, ops] : extracted.record.ops) {
      const int q = aligned.qubit_of(vertex);
      for (char op : ops) {
        if (op == 'H') aligned.apply_h(q);
        if (op == 'S') aligned.apply_s(q);
        if (op == 'Z') aligned.apply_z(q);
      }
    }
    Graph current = extracted.graph;
    for (VertexId a : *path) {
      apply_tau_correction(aligned, a, current.neighbors(a));
      current = local_complement(current, a);
    }
    if (!aligned.same_state_as(tableau_from_graph(next))) {
      out.certified = false;
      ++out.leaves;
      continue;
    }
    run_corrected_branches(aligned, next, specs, step + 1, out);
  }
}

}  // namespace

SequenceCertification certify_sequence(
    const Graph& g, const std::vector<MeasurementSpec>& specs) {
  SequenceCertification out;
  run_corrected_branches(tableau_from_graph(g), g, specs, 0, out);
  return out;
}

RecipeGridResult verify_recipe_grid(std::size_t n_max, bool collect_all) {
  RecipeGridResult result;
  for (std::size_t n1 = 2; n1 <= n_max; ++n1) {
    for (std::size_t n2 = 2; n2 <= n_max; ++n2) {
      QlanNetwork net = merge_remote_cz(build_network(n1, n2));
      for (RecipeKind kind : all_recipe_kinds()) {
        for (const RecipeParams& params : valid_param_grid(net, kind)) {
          RecipeReport report = apply_recipe(net, kind, params);
          ++result.cases;
          if (!report.matched) ++result.failures;
          if (collect_all || !report.matched) {
            result.records.push_back(
                GridCase{n1, n2, kind, params, report.matched});
          }
        }
      }
    }
  }
  return result;
}

}  // namespace qweave
