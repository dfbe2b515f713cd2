#pragma once

#include <map>
#include <string>
#include <vector>

#include "qweave/graph.hpp"
#include "qweave/measurement.hpp"
#include "qweave/pauli.hpp"

namespace qweave {

inline constexpr int kTableauQubitLimit = 16;

/// Stabilizer state on n qubits as n independent commuting Hermitian
/// Pauli generators, plus the mapping from qubit slots to the graph
/// vertices they represent. Phases are exact; no floating point.
class StabilizerTableau {
 public:
  StabilizerTableau() = default;
  StabilizerTableau(std::vector<PauliString> generators,
                    std::vector<VertexId> qubit_vertices);

  int num_qubits() const { return static_cast<int>(rows_.size()); }
  const std::vector<PauliString>& generators() const { return rows_; }
  const std::vector<VertexId>& qubit_vertices() const { return vertices_; }

  VertexId vertex_of(int qubit) const { return vertices_.at(qubit); }
  int qubit_of(VertexId v) const;  // throws UnknownVertexError

  /// Commutation, independence (full symplectic rank) and Hermitian
  /// phases. Independence of Hermitian generators already rules -I out
  /// of the generated group.
  bool is_valid() const;

  /// True when the two tableaus generate the same signed stabilizer
  /// group over the same qubit-to-vertex assignment.
  bool same_state_as(const StabilizerTableau& other) const;

  void apply_h(int qubit);
  void apply_s(int qubit);
  void apply_sdg(int qubit);
  void apply_sx(int qubit);  // sqrt(-iX) conjugation: Z -> -Y, Y -> Z
  void apply_z(int qubit);

  // Internal row operations, exposed for the measurement engine.
  void multiply_row(int target, int source);
  void set_row(int row, PauliString value);
  void swap_rows(int a, int b);

 private:
  std::vector<PauliString> rows_;
  std::vector<VertexId> vertices_;
};

/// Generators X_i prod_{j in N_i} Z_j of the graph state |g>.
StabilizerTableau tableau_from_graph(const Graph& g);

struct OutcomeBranch {
  int sign = +1;            // measurement outcome, +1 or -1
  bool deterministic = false;  // probability 1 when true, else 1/2
  StabilizerTableau tableau;   // post-measurement state, qubit kept

  double probability() const { return deterministic ? 1.0 : 0.5; }
};

/// True projective Pauli measurement. Returns both branches when the
/// outcome is random (probability 1/2 each) and a single branch when the
/// measured operator is (+/-) in the stabilizer group.
std::vector<OutcomeBranch> measure_pauli(const StabilizerTableau& t,
                                         VertexId vertex, PauliBasis basis);

/// Remove a qubit whose state has factorized (e.g. right after it was
/// measured). Throws NotFactorizedError when the qubit is still
/// correlated with the rest.
StabilizerTableau discard_qubit(const StabilizerTableau& t, VertexId vertex);

/// Per-qubit record of the single-qubit Cliffords applied to a tableau
/// while reducing it to graph form, in application order ('H','S','Z').
struct LocalCliffordRecord {
  std::map<VertexId, std::string> ops;

  bool is_identity() const { return ops.empty(); }
};

struct ExtractedGraph {
  Graph graph;
  LocalCliffordRecord record;
};

/// Reduce a stabilizer state to its graph-state standard form: make the
/// X block invertible with Hadamards, Gauss-Jordan it to the identity,
/// clear the Z diagonal with phase gates and fix signs with Pauli Zs.
/// Applying record's ops (in order) to `t` yields a tableau generating
/// the same group as tableau_from_graph(result.graph).
ExtractedGraph extract_graph(const StabilizerTableau& t);

}  // namespace qweave
