#pragma once

#include <complex>
#include <vector>

#include "qweave/graph.hpp"
#include "qweave/pauli.hpp"

namespace qweave {

inline constexpr std::size_t kStatevectorQubitLimit = 12;

using Statevector = std::vector<std::complex<double>>;

/// Amplitudes of prod_{(i,j) in E} CZ_ij |+>^n. Qubit q is the q-th
/// smallest vertex and indexes bit q of the basis state (little endian).
Statevector statevector_from_graph(const Graph& g);

/// Apply a Pauli string to a statevector: Z phases first, then the X
/// permutation, then the global i^phase factor.
Statevector apply_pauli(const PauliString& p, const Statevector& psi);

/// || P|psi> - |psi> ||, the residual of a claimed stabilizer.
double stabilizer_residual(const PauliString& p, const Statevector& psi);

}  // namespace qweave
