#include "qweave/pauli.hpp"

#include <bit>

#include "qweave/errors.hpp"

namespace qweave {

bool PauliString::commutes_with(const PauliString& other) const {
  int cross = std::popcount(x & other.z) + std::popcount(z & other.x);
  return (cross & 1) == 0;
}

PauliString PauliString::multiplied_by(const PauliString& rhs) const {
  // Moving rhs's X block left through this->z picks up one (-1) per
  // crossing qubit; squared factors vanish without extra phase.
  PauliString out;
  out.num_qubits = num_qubits;
  out.x = x ^ rhs.x;
  out.z = z ^ rhs.z;
  int p = phase_exp + rhs.phase_exp + 2 * std::popcount(z & rhs.x);
  out.phase_exp = static_cast<std::uint8_t>(p & 3);
  return out;
}

int PauliString::weight_y() const { return std::popcount(x & z); }

bool PauliString::is_hermitian() const {
  return ((phase_exp ^ weight_y()) & 1) == 0;
}

int PauliString::sign() const {
  int rel = (phase_exp - weight_y()) & 3;
  if (rel == 0) return 1;
  if (rel == 2) return -1;
  throw Error("pauli string is not Hermitian");
}

void PauliString::conjugate_h(int q) {
  // H: X <-> Z, Y -> -Y
  bool xb = (x >> q) & 1;
  bool zb = (z >> q) & 1;
  if (xb && zb) phase_exp = static_cast<std::uint8_t>((phase_exp + 2) & 3);
  x = (x & ~bit(q)) | (zb ? bit(q) : 0);
  z = (z & ~bit(q)) | (xb ? bit(q) : 0);
}

void PauliString::conjugate_s(int q) {
  // S: X -> Y, Y -> -X, Z -> Z; in the encoding both directions flip the
  // z bit and add one factor of i.
  bool xb = (x >> q) & 1;
  if (!xb) return;
  z ^= bit(q);
  phase_exp = static_cast<std::uint8_t>((phase_exp + 1) & 3);
}

void PauliString::conjugate_sdg(int q) {
  bool xb = (x >> q) & 1;
  if (!xb) return;
  z ^= bit(q);
  phase_exp = static_cast<std::uint8_t>((phase_exp + 3) & 3);
}

void PauliString::conjugate_x(int q) {
  if ((z >> q) & 1) negate();
}

void PauliString::conjugate_z(int q) {
  if ((x >> q) & 1) negate();
}

PauliString PauliString::dropped(int q) const {
  if (has_support(q)) {
    throw Error("dropping qubit with support");
  }
  auto squeeze = [q](std::uint32_t bits) {
    std::uint32_t low = bits & (bit(q) - 1);
    std::uint32_t high = bits >> (q + 1);
    return low | (high << q);
  };
  PauliString out = *this;
  out.x = squeeze(x);
  out.z = squeeze(z);
  out.num_qubits = num_qubits - 1;
  return out;
}

std::string PauliString::to_string() const {
  std::string out;
  switch (sign() > 0 ? 0 : 1) {
    case 0: out = "+"; break;
    case 1: out = "-"; break;
  }
  for (int q = 0; q < num_qubits; ++q) {
    bool xb = (x >> q) & 1;
    bool zb = (z >> q) & 1;
    out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return out;
}

}  // namespace qweave
