#include "qweave/statevector.hpp"

#include <bit>
#include <cmath>
#include <map>

namespace qweave {

Statevector statevector_from_graph(const Graph& g) {
  const auto verts = g.vertices();
  const std::size_t n = verts.size();
  if (n > kStatevectorQubitLimit) {
    throw SizeLimitError("graph exceeds the statevector qubit limit");
  }
  std::map<VertexId, std::size_t> index;
  for (std::size_t q = 0; q < n; ++q) index[verts[q]] = q;

  const std::size_t dim = std::size_t{1} << n;
  Statevector psi(dim, std::complex<double>(std::pow(2.0, -0.5 * n), 0.0));
  for (const auto& [a, b] : g.edges()) {
    const std::size_t mask =
        (std::size_t{1} << index[a]) | (std::size_t{1} << index[b]);
    for (std::size_t basis = 0; basis < dim; ++basis) {
      if ((basis & mask) == mask) psi[basis] = -psi[basis];
    }
  }
  return psi;
}

Statevector apply_pauli(const PauliString& p, const Statevector& psi) {
  static const std::complex<double> kPhases[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> global = kPhases[p.phase_exp & 3];
  Statevector out(psi.size());
  for (std::size_t basis = 0; basis < psi.size(); ++basis) {
    const int z_parity = std::popcount(static_cast<std::uint64_t>(basis) &
                                       static_cast<std::uint64_t>(p.z)) & 1;
    const std::size_t image = basis ^ static_cast<std::size_t>(p.x);
    out[image] = global * (z_parity ? -psi[basis] : psi[basis]);
  }
  return out;
}

double stabilizer_residual(const PauliString& p, const Statevector& psi) {
  Statevector mapped = apply_pauli(p, psi);
  double norm_sq = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    norm_sq += std::norm(mapped[k] - psi[k]);
  }
  return std::sqrt(norm_sq);
}

}  // namespace qweave
