#include "qweave/serialize.hpp"

namespace qweave {

namespace {

Json label_to_json(const std::optional<QlanVertexLabel>& label) {
  if (!label) return nullptr;
  Json j;
  j["qlan"] = label->qlan_id;
  j["role"] = label->role == QlanRole::Super ? "super" : "client";
  j["index"] = label->index;
  return j;
}

std::optional<QlanVertexLabel> label_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  QlanVertexLabel label;
  label.qlan_id = j.at("qlan").get<int>();
  label.role = j.at("role").get<std::string>() == "super" ? QlanRole::Super
                                                          : QlanRole::Client;
  label.index = j.at("index").get<int>();
  return label;
}

Json side_to_json(TargetSide side) {
  return side == TargetSide::Left ? "left" : "right";
}

TargetSide side_from_json(const Json& j) {
  return j.get<std::string>() == "left" ? TargetSide::Left
                                        : TargetSide::Right;
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (VertexId v : g.vertices()) {
    out += "  \"" + g.vertex_name(v) + "\";\n";
  }
  for (const auto& [a, b] : g.edges()) {
    out += "  \"" + g.vertex_name(a) + "\" -- \"" + g.vertex_name(b) + "\";\n";
  }
  out += "}\n";
  return out;
}

Json graph_to_json(const Graph& g) {
  Json vertices = Json::array();
  for (VertexId v : g.vertices()) {
    Json entry;
    entry["id"] = v.value;
    entry["label"] = label_to_json(g.label(v));
    vertices.push_back(std::move(entry));
  }
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) {
    edges.push_back(Json::array({a.value, b.value}));
  }
  Json j;
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  Graph g;
  for (const Json& entry : j.at("vertices")) {
    g.add_vertex(VertexId{entry.at("id").get<std::uint32_t>()},
                 label_from_json(entry.value("label", Json())));
  }
  for (const Json& edge : j.at("edges")) {
    g.add_edge(VertexId{edge.at(0).get<std::uint32_t>()},
               VertexId{edge.at(1).get<std::uint32_t>()});
  }
  return g;
}

Json spec_to_json(const MeasurementSpec& spec) {
  Json j;
  j["vertex"] = spec.vertex.value;
  j["basis"] = basis_name(spec.basis);
  j["k0"] = spec.k0 ? Json(spec.k0->value) : Json(nullptr);
  return j;
}

MeasurementSpec spec_from_json(const Json& j) {
  MeasurementSpec spec;
  spec.vertex = VertexId{j.at("vertex").get<std::uint32_t>()};
  spec.basis = basis_from_name(j.at("basis").get<std::string>());
  const Json& k0 = j.value("k0", Json());
  if (!k0.is_null()) spec.k0 = VertexId{k0.get<std::uint32_t>()};
  return spec;
}

Json sequence_to_json(const std::vector<MeasurementSpec>& specs) {
  Json j = Json::array();
  for (const MeasurementSpec& spec : specs) j.push_back(spec_to_json(spec));
  return j;
}

std::vector<MeasurementSpec> sequence_from_json(const Json& j) {
  std::vector<MeasurementSpec> out;
  for (const Json& entry : j) out.push_back(spec_from_json(entry));
  return out;
}

Json trace_entry_to_json(const TraceEntry& entry) {
  Json j;
  j["spec"] = spec_to_json(entry.spec);
  j["resolved_k0"] =
      entry.resolved_k0 ? Json(entry.resolved_k0->value) : Json(nullptr);
  j["pre_vertices"] = entry.pre_vertex_count;
  return j;
}

std::string trace_to_jsonl(const MeasurementTrace& trace) {
  std::string out;
  for (const TraceEntry& entry : trace) {
    out += trace_entry_to_json(entry).dump();
    out += '\n';
  }
  return out;
}

namespace {

TraceEntry trace_entry_from_json(const Json& j) {
  TraceEntry entry;
  entry.spec = spec_from_json(j.at("spec"));
  const Json& k0 = j.at("resolved_k0");
  if (!k0.is_null()) entry.resolved_k0 = VertexId{k0.get<std::uint32_t>()};
  entry.pre_vertex_count = j.at("pre_vertices").get<std::size_t>();
  return entry;
}

}  // namespace

Json ledger_to_json(const ResourceLedger& ledger) {
  Json j;
  j["epr_generated"] = ledger.epr_generated;
  j["epr_consumed_intra"] = ledger.epr_consumed_intra;
  j["epr_consumed_inter"] = ledger.epr_consumed_inter;
  return j;
}

ResourceLedger ledger_from_json(const Json& j) {
  ResourceLedger ledger;
  ledger.epr_generated = j.at("epr_generated").get<std::uint64_t>();
  ledger.epr_consumed_intra = j.at("epr_consumed_intra").get<std::uint64_t>();
  ledger.epr_consumed_inter = j.at("epr_consumed_inter").get<std::uint64_t>();
  return ledger;
}

Json qlan_to_json(const Qlan& qlan) {
  Json clients = Json::array();
  for (VertexId v : qlan.client_vertices) clients.push_back(v.value);
  Json j;
  j["id"] = qlan.id;
  j["super_vertex"] = qlan.super_vertex.value;
  j["client_vertices"] = std::move(clients);
  j["state_graph"] = graph_to_json(qlan.state_graph);
  return j;
}

Qlan qlan_from_json(const Json& j) {
  Qlan qlan;
  qlan.id = j.at("id").get<int>();
  qlan.super_vertex = VertexId{j.at("super_vertex").get<std::uint32_t>()};
  for (const Json& v : j.at("client_vertices")) {
    qlan.client_vertices.push_back(VertexId{v.get<std::uint32_t>()});
  }
  qlan.state_graph = graph_from_json(j.at("state_graph"));
  return qlan;
}

Json network_to_json(const QlanNetwork& net) {
  Json j;
  j["qlan1"] = qlan_to_json(net.qlan1);
  j["qlan2"] = qlan_to_json(net.qlan2);
  j["shared_graph"] =
      net.shared_graph ? graph_to_json(*net.shared_graph) : Json(nullptr);
  j["ledger"] = ledger_to_json(net.ledger);
  return j;
}

QlanNetwork network_from_json(const Json& j) {
  QlanNetwork net;
  net.qlan1 = qlan_from_json(j.at("qlan1"));
  net.qlan2 = qlan_from_json(j.at("qlan2"));
  if (!j.at("shared_graph").is_null()) {
    net.shared_graph = graph_from_json(j.at("shared_graph"));
  }
  net.ledger = ledger_from_json(j.at("ledger"));
  return net;
}

Json report_to_json(const RecipeReport& report) {
  Json params;
  params["side"] = side_to_json(report.params.side);
  params["client_j"] =
      report.params.client_j ? Json(*report.params.client_j) : Json(nullptr);
  params["client_i"] =
      report.params.client_i ? Json(*report.params.client_i) : Json(nullptr);

  Json trace = Json::array();
  for (const TraceEntry& entry : report.trace) {
    trace.push_back(trace_entry_to_json(entry));
  }

  Json j;
  j["kind"] = recipe_cli_name(report.kind);
  j["params"] = std::move(params);
  j["plan"] = sequence_to_json(report.plan);
  j["result"] = graph_to_json(report.result);
  j["expected"] = graph_to_json(report.expected);
  j["matched"] = report.matched;
  j["trace"] = std::move(trace);
  return j;
}

RecipeReport report_from_json(const Json& j) {
  RecipeReport report;
  report.kind = recipe_from_cli_name(j.at("kind").get<std::string>());
  const Json& params = j.at("params");
  report.params.side = side_from_json(params.at("side"));
  if (!params.at("client_j").is_null()) {
    report.params.client_j = params.at("client_j").get<int>();
  }
  if (!params.at("client_i").is_null()) {
    report.params.client_i = params.at("client_i").get<int>();
  }
  report.plan = sequence_from_json(j.at("plan"));
  report.result = graph_from_json(j.at("result"));
  report.expected = graph_from_json(j.at("expected"));
  report.matched = j.at("matched").get<bool>();
  for (const Json& entry : j.at("trace")) {
    report.trace.push_back(trace_entry_from_json(entry));
  }
  return report;
}

}  // namespace qweave
