#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qweave/measurement.hpp"
#include "qweave/qlan.hpp"

namespace qweave {

/// The named artificial-topology constructions. Each expands to a fixed
/// Pauli measurement sequence on the merged binary star and comes with a
/// closed-form expected graph.
enum class RecipeKind {
  HierarchicalPeerToPeer,  // complete graph: one super + other QLAN's clients
  RoleDelegationI,         // star over the same set, centered at a client
  ClientsHandOver,         // star over the same set, centered at the super
  PurePeerToPeer,          // complete graph: one client + other QLAN's clients
  RoleDelegationII_Case1,  // star: spared client joins, centered across
  RoleDelegationII_Case2,  // star centered at the spared client
  Extranet,                // complete bipartite between the client sets
  DoubleRoleDelegation,    // binary star on the clients, hubs j and i
  StarRecenter,            // x-measurement at a star center, recentered at k0
};

constexpr std::size_t kRecipeKindCount = 9;

std::string recipe_cli_name(RecipeKind kind);
RecipeKind recipe_from_cli_name(const std::string& name);
std::vector<RecipeKind> all_recipe_kinds();

enum class TargetSide { Left, Right };

/// Recipe parameters. The conventions follow the proofs, which fix the
/// target on the rightmost QLAN: the "dotted" QLAN is measured away and
/// the "double-dotted" QLAN carries the target. target_side = Right means
/// dotted = QLAN 1; Left swaps the roles. client_j indexes a client of
/// the dotted QLAN (the spared client / first hub), client_i a client of
/// the double-dotted QLAN (the recentering target / second hub).
struct RecipeParams {
  TargetSide side = TargetSide::Right;
  std::optional<int> client_j;
  std::optional<int> client_i;
};

bool requires_client_j(RecipeKind kind);
bool requires_client_i(RecipeKind kind);

/// The appendix measurement sequence for the recipe, with k0 pinned where
/// the proof pins it. Requires a merged network and valid parameters.
std::vector<MeasurementSpec> plan(const QlanNetwork& net, RecipeKind kind,
                                  const RecipeParams& params);

/// The closed-form target graph on the surviving labeled vertices.
Graph expected_graph(const QlanNetwork& net, RecipeKind kind,
                     const RecipeParams& params);

struct RecipeReport {
  RecipeKind kind = RecipeKind::HierarchicalPeerToPeer;
  RecipeParams params;
  std::vector<MeasurementSpec> plan;
  Graph result;
  Graph expected;
  bool matched = false;
  MeasurementTrace trace;
};

/// Run the plan through the rewrite engine and compare with the closed
/// form under labeled graph equality.
RecipeReport apply_recipe(const QlanNetwork& net, RecipeKind kind,
                          const RecipeParams& params);

/// Append Pauli-z measurements removing every target vertex outside
/// `keep` (the footnote trick for shrinking a complete target). `keep`
/// must be a non-empty subset of the expected graph's vertices.
std::vector<MeasurementSpec> restrict_to_subset(
    const std::vector<MeasurementSpec>& plan, const Graph& expected,
    const std::set<VertexId>& keep);

}  // namespace qweave
