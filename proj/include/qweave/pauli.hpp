#pragma once

#include <cstdint>
#include <string>

namespace qweave {

/// n-qubit Pauli operator in binary-symplectic form with an exact phase:
///   value = i^phase_exp * prod_q X_q^{x bit} Z_q^{z bit}
/// (per qubit the X factor is written left of the Z factor, so Y_q is
/// encoded as x=z=1 with one extra factor of i). Supports up to 32 qubits,
/// far above the oracle size limits.
struct PauliString {
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  std::uint8_t phase_exp = 0;  // exponent of i, mod 4
  int num_qubits = 0;

  static PauliString identity(int n) { return {0, 0, 0, n}; }
  static PauliString single_x(int n, int q) {
    return {bit(q), 0, 0, n};
  }
  static PauliString single_y(int n, int q) {
    return {bit(q), bit(q), 1, n};
  }
  static PauliString single_z(int n, int q) {
    return {0, bit(q), 0, n};
  }

  static std::uint32_t bit(int q) { return std::uint32_t{1} << q; }

  bool commutes_with(const PauliString& other) const;
  PauliString multiplied_by(const PauliString& rhs) const;

  bool has_support(int q) const { return ((x | z) >> q) & 1; }
  int weight_y() const;  // number of qubits with both x and z set

  /// A Pauli observable must be Hermitian: phase_exp == weight_y mod 2.
  bool is_hermitian() const;
  /// Sign relative to the positive sigma product: +1 or -1.
  int sign() const;
  void negate() { phase_exp = static_cast<std::uint8_t>((phase_exp + 2) & 3); }

  /// Conjugation by single-qubit Cliffords acting on qubit q, mapping the
  /// operator P to U P U^dagger.
  void conjugate_h(int q);
  void conjugate_s(int q);
  void conjugate_sdg(int q);
  void conjugate_x(int q);
  void conjugate_z(int q);

  /// Drop qubit q (which must have no support) and shift higher qubits down.
  PauliString dropped(int q) const;

  std::string to_string() const;  // e.g. "-XZIY"

  bool operator==(const PauliString&) const = default;
};

}  // namespace qweave
