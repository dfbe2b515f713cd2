#include "qweave/measurement.hpp"

namespace qweave {

std::string basis_name(PauliBasis basis) {
  switch (basis) {
    case PauliBasis::X: return "X";
    case PauliBasis::Y: return "Y";
    case PauliBasis::Z: return "Z";
  }
  return "?";
}

PauliBasis basis_from_name(const std::string& name) {
  if (name == "X" || name == "x") return PauliBasis::X;
  if (name == "Y" || name == "y") return PauliBasis::Y;
  if (name == "Z" || name == "z") return PauliBasis::Z;
  throw Error("unknown Pauli basis '" + name + "'");
}

std::optional<VertexId> default_k0(const Graph& g, VertexId i) {
  const auto& n_i = g.neighbors(i);
  if (n_i.empty()) return std::nullopt;
  return *n_i.begin();
}

MeasureResult measure(const Graph& g, const MeasurementSpec& spec) {
  if (!g.has_vertex(spec.vertex)) {
    throw UnknownVertexError("measured vertex " +
                             std::to_string(spec.vertex.value) +
                             " is not in the graph");
  }
  if (spec.k0 && spec.basis != PauliBasis::X) {
    throw InvalidK0Error("k0 is only valid for X measurements");
  }

  TraceEntry entry{spec, std::nullopt, g.vertex_count()};
  Graph out;
  switch (spec.basis) {
    case PauliBasis::Z:
      out = delete_vertex(g, spec.vertex);
      break;
    case PauliBasis::Y:
      out = delete_vertex(local_complement(g, spec.vertex), spec.vertex);
      break;
    case PauliBasis::X: {
      std::optional<VertexId> k0 = spec.k0 ? spec.k0 : default_k0(g, spec.vertex);
      if (!k0) {
        // isolated vertex: the k0 sequence is vacuous, drop the vertex
        out = delete_vertex(g, spec.vertex);
        break;
      }
      if (!g.neighbors(spec.vertex).count(*k0)) {
        throw InvalidK0Error("k0 " + std::to_string(k0->value) +
                             " is not a neighbor of vertex " +
                             std::to_string(spec.vertex.value));
      }
      entry.resolved_k0 = k0;
      Graph step = local_complement(g, *k0);
      step = local_complement(step, spec.vertex);
      step = delete_vertex(step, spec.vertex);
      out = local_complement(step, *k0);
      break;
    }
  }
  return {std::move(out), std::move(entry)};
}

SequenceResult measure_sequence(const Graph& g,
                                const std::vector<MeasurementSpec>& specs) {
  SequenceResult result{g, {}};
  result.trace.reserve(specs.size());
  for (std::size_t step = 0; step < specs.size(); ++step) {
    const std::string prefix = "step " + std::to_string(step) + ": ";
    try {
      MeasureResult r = measure(result.graph, specs[step]);
      result.graph = std::move(r.graph);
      result.trace.push_back(std::move(r.entry));
    } catch (const UnknownVertexError& e) {
      throw UnknownVertexError(prefix + e.what());
    } catch (const InvalidK0Error& e) {
      throw InvalidK0Error(prefix + e.what());
    } catch (const Error& e) {
      throw Error(prefix + e.what());
    }
  }
  return result;
}

}  // namespace qweave
