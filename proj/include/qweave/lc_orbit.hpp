#pragma once

#include <cstddef>
#include <vector>

#include "qweave/graph.hpp"
#include "qweave/measurement.hpp"

namespace qweave {

inline constexpr std::size_t kOrbitVertexLimit = 10;
inline constexpr std::size_t kDefaultOrbitCap = 1u << 20;
inline constexpr std::size_t kCertifyVertexLimit = 8;

struct LcOrbit {
  std::vector<Graph> graphs;  // deterministic BFS discovery order
  bool truncated = false;     // hit the cap before closing the orbit
};

/// Breadth-first closure of g under local complementation at every
/// vertex. Stops (with truncated=true) once `cap` graphs were collected.
LcOrbit lc_orbit(const Graph& g, std::size_t cap = kDefaultOrbitCap);

/// True iff g2 lies in the tau-orbit of g1 under the identity vertex
/// correspondence (same vertex ids, edge sets compared; labels are not
/// part of the equivalence). Throws OrbitCapError when the orbit was
/// truncated before g2 could be found.
bool lc_equivalent(const Graph& g1, const Graph& g2,
                   std::size_t cap = kDefaultOrbitCap);

/// Oracle check of the measurement rewrite rule: simulate the projective
/// measurement on the actual stabilizer state of |g>, and for every
/// outcome branch verify that the residual state's extracted graph is
/// LC-equivalent to the rewrite engine's output. k0 for X measurements is
/// taken from the spec (or defaulted) exactly as the engine does.
bool certify_measurement(const Graph& g, const MeasurementSpec& spec);

}  // namespace qweave
