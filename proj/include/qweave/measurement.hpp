#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qweave/graph.hpp"

namespace qweave {

enum class PauliBasis { X, Y, Z };

std::string basis_name(PauliBasis basis);
PauliBasis basis_from_name(const std::string& name);

/// One single-qubit Pauli measurement. k0 is only meaningful for X
/// measurements and, when present, must be a neighbor of `vertex` in the
/// graph the measurement is applied to.
struct MeasurementSpec {
  VertexId vertex;
  PauliBasis basis = PauliBasis::Z;
  std::optional<VertexId> k0;

  bool operator==(const MeasurementSpec&) const = default;
};

/// Audit record of a measurement step: the spec as requested, the k0 that
/// was actually used (defaulted if the spec left it open) and the vertex
/// count of the graph the step was applied to.
struct TraceEntry {
  MeasurementSpec spec;
  std::optional<VertexId> resolved_k0;
  std::size_t pre_vertex_count = 0;

  bool operator==(const TraceEntry&) const = default;
};

using MeasurementTrace = std::vector<TraceEntry>;

/// Smallest-ordered neighbor of i, or nullopt when i is isolated.
std::optional<VertexId> default_k0(const Graph& g, VertexId i);

struct MeasureResult {
  Graph graph;
  TraceEntry entry;
};

/// Graph rewrite of a single Pauli measurement:
///   Z: G - i
///   Y: tau_i(G) - i
///   X: tau_k0( tau_i( tau_k0(G) ) - i )   with k0 a neighbor of i
/// An X measurement on an isolated vertex degenerates to plain deletion
/// (the state factorizes, so there is no k0 to pick).
MeasureResult measure(const Graph& g, const MeasurementSpec& spec);

struct SequenceResult {
  Graph graph;
  MeasurementTrace trace;
};

/// Left fold of `measure`. Errors from individual steps are annotated
/// with the 0-based step index.
SequenceResult measure_sequence(const Graph& g,
                                const std::vector<MeasurementSpec>& specs);

}  // namespace qweave
