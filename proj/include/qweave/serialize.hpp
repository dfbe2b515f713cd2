#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qweave/graph.hpp"
#include "qweave/measurement.hpp"
#include "qweave/qlan.hpp"
#include "qweave/recipes.hpp"

namespace qweave {

using Json = nlohmann::ordered_json;

/// DOT: one quoted node line per vertex (ascending ids), then one
/// `"a" -- "b";` line per edge in lexicographic order. QLAN labels render
/// as `qlanID_role_index`, plain vertices as their decimal id.
std::string to_dot(const Graph& g);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json spec_to_json(const MeasurementSpec& spec);
MeasurementSpec spec_from_json(const Json& j);

Json sequence_to_json(const std::vector<MeasurementSpec>& specs);
std::vector<MeasurementSpec> sequence_from_json(const Json& j);

Json trace_entry_to_json(const TraceEntry& entry);
std::string trace_to_jsonl(const MeasurementTrace& trace);

Json ledger_to_json(const ResourceLedger& ledger);
ResourceLedger ledger_from_json(const Json& j);

Json qlan_to_json(const Qlan& qlan);
Qlan qlan_from_json(const Json& j);

Json network_to_json(const QlanNetwork& net);
QlanNetwork network_from_json(const Json& j);

Json report_to_json(const RecipeReport& report);
RecipeReport report_from_json(const Json& j);

}  // namespace qweave
