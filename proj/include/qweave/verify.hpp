#pragma once

#include <cstddef>
#include <vector>

#include "qweave/lc_orbit.hpp"
#include "qweave/recipes.hpp"
#include "qweave/serialize.hpp"
#include "qweave/tableau.hpp"

namespace qweave {

/// All simple graphs on vertices 0..n-1: bit k of `edge_mask` switches the
/// k-th pair (0,1),(0,2),(1,2),(0,3),... in lexicographic column order.
Graph graph_from_edge_mask(std::size_t n, std::uint64_t edge_mask);
std::uint64_t edge_mask_count(std::size_t n);  // 2^(n choose 2)

struct CertifyCase {
  Graph graph;
  MeasurementSpec spec;
  int branches = 0;
  bool lc_equivalent = false;
  std::size_t orbit_size = 0;  // orbit of the rewrite-engine output
};

Json certify_case_to_json(const CertifyCase& c);

/// Oracle-certify one measurement and record the branch details.
CertifyCase certify_case(const Graph& g, const MeasurementSpec& spec);

struct ExhaustiveCertifyResult {
  std::size_t graphs = 0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::size_t> graphs_per_n;  // index 0 holds n=1
  std::vector<std::size_t> cases_per_n;
  std::vector<CertifyCase> records;  // only when collect_records
};

/// Certify every vertex and basis of every labeled graph with
/// 1 <= n <= n_max against the stabilizer oracle.
ExhaustiveCertifyResult exhaustive_certify(std::size_t n_max,
                                           bool collect_records = false);

struct GridCase {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  RecipeKind kind = RecipeKind::HierarchicalPeerToPeer;
  RecipeParams params;
  bool matched = false;
};

Json grid_case_to_json(const GridCase& c);

/// Every valid parameter choice for one recipe on one merged network.
std::vector<RecipeParams> valid_param_grid(const QlanNetwork& net,
                                           RecipeKind kind);

struct RecipeGridResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<GridCase> records;  // only failures unless collect_all
};

/// Run apply() over the full grid 2 <= n1, n2 <= n_max, both sides, all
/// recipes and parameter choices, checking the closed forms.
RecipeGridResult verify_recipe_grid(std::size_t n_max,
                                    bool collect_all = false);

struct SequenceCertification {
  bool certified = true;
  std::size_t leaves = 0;  // outcome-branch combinations explored
};

/// Simulate the corrected measurement protocol on the stabilizer oracle,
/// exploring every combination of outcome branches. After each projective
/// measurement the residual's extracted graph must lie in the LC class of
/// the rewrite engine's intermediate graph; the explicit local-Clifford
/// correction (extraction record plus a tau-path of sqrt(-iX)/sqrt(-iZ)
/// rotations) is then applied so the next step starts from that graph
/// state, exactly as the measurement rule composes.
SequenceCertification certify_sequence(
    const Graph& g, const std::vector<MeasurementSpec>& specs);

/// Conjugate a tableau by the local Clifford that maps |H> to |tau_a(H)>,
/// where `neighbors` is the neighborhood of a in H.
void apply_tau_correction(StabilizerTableau& t, VertexId a,
                          const std::set<VertexId>& neighbors);

}  // namespace qweave
