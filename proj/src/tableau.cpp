#include "qweave/tableau.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace qweave {

namespace {

// GF(2) elimination over 2n-bit symplectic vectors with combination
// tracking, used to express a Pauli in the row space of a generator set.
// Invariant: each stored row owns a distinct leading bit that no other
// stored row contains, so reduction is a single scan.
class Gf2Span {
 public:
  void add(std::uint64_t vec, std::uint64_t combo) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (vec & leads_[k]) {
        vec ^= rows_[k];
        combo ^= combos_[k];
      }
    }
    if (vec == 0) return;
    std::uint64_t lead = std::bit_floor(vec);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (rows_[k] & lead) {
        rows_[k] ^= vec;
        combos_[k] ^= combo;
      }
    }
    rows_.push_back(vec);
    combos_.push_back(combo);
    leads_.push_back(lead);
  }

  std::optional<std::uint64_t> solve(std::uint64_t target) const {
    std::uint64_t combo = 0;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (target & leads_[k]) {
        target ^= rows_[k];
        combo ^= combos_[k];
      }
    }
    if (target != 0) return std::nullopt;
    return combo;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> combos_;
  std::vector<std::uint64_t> leads_;
};

std::uint64_t symplectic_bits(const PauliString& p) {
  return static_cast<std::uint64_t>(p.x) |
         (static_cast<std::uint64_t>(p.z) << 32);
}

PauliString basis_operator(PauliBasis basis, int n, int q) {
  switch (basis) {
    case PauliBasis::X: return PauliString::single_x(n, q);
    case PauliBasis::Y: return PauliString::single_y(n, q);
    case PauliBasis::Z: return PauliString::single_z(n, q);
  }
  throw Error("unknown basis");
}

}  // namespace

StabilizerTableau::StabilizerTableau(std::vector<PauliString> generators,
                                     std::vector<VertexId> qubit_vertices)
    : rows_(std::move(generators)), vertices_(std::move(qubit_vertices)) {
  if (rows_.size() != vertices_.size()) {
    throw Error("tableau generator/vertex count mismatch");
  }
}

int StabilizerTableau::qubit_of(VertexId v) const {
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (vertices_[k] == v) return static_cast<int>(k);
  }
  throw UnknownVertexError("vertex " + std::to_string(v.value) +
                           " not mapped to a qubit");
}

bool StabilizerTableau::is_valid() const {
  const int n = num_qubits();
  for (int i = 0; i < n; ++i) {
    if (!rows_[i].is_hermitian()) return false;
    for (int j = i + 1; j < n; ++j) {
      if (!rows_[i].commutes_with(rows_[j])) return false;
    }
  }
  Gf2Span span;
  for (int i = 0; i < n; ++i) span.add(symplectic_bits(rows_[i]), 0);
  return span.rank() == static_cast<std::size_t>(n);
}

bool StabilizerTableau::same_state_as(const StabilizerTableau& other) const {
  if (vertices_ != other.vertices_) return false;
  Gf2Span span;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    span.add(symplectic_bits(rows_[i]), std::uint64_t{1} << i);
  }
  for (const PauliString& g : other.rows_) {
    auto combo = span.solve(symplectic_bits(g));
    if (!combo) return false;
    PauliString prod = PauliString::identity(num_qubits());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (*combo & (std::uint64_t{1} << i)) prod = prod.multiplied_by(rows_[i]);
    }
    if (prod.phase_exp != g.phase_exp) return false;
  }
  return true;
}

void StabilizerTableau::apply_h(int qubit) {
  for (PauliString& row : rows_) row.conjugate_h(qubit);
}

void StabilizerTableau::apply_s(int qubit) {
  for (PauliString& row : rows_) row.conjugate_s(qubit);
}

void StabilizerTableau::apply_sdg(int qubit) {
  for (PauliString& row : rows_) row.conjugate_sdg(qubit);
}

void StabilizerTableau::apply_sx(int qubit) {
  for (PauliString& row : rows_) {
    if ((row.z >> qubit) & 1) {
      row.x ^= PauliString::bit(qubit);
      row.phase_exp = static_cast<std::uint8_t>((row.phase_exp + 3) & 3);
    }
  }
}

void StabilizerTableau::apply_z(int qubit) {
  for (PauliString& row : rows_) row.conjugate_z(qubit);
}

void StabilizerTableau::multiply_row(int target, int source) {
  rows_[target] = rows_[target].multiplied_by(rows_[source]);
}

void StabilizerTableau::set_row(int row, PauliString value) {
  rows_[row] = std::move(value);
}

void StabilizerTableau::swap_rows(int a, int b) {
  std::swap(rows_[a], rows_[b]);
}

StabilizerTableau tableau_from_graph(const Graph& g) {
  const auto verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  if (n > kTableauQubitLimit) {
    throw SizeLimitError("graph exceeds the tableau qubit limit");
  }
  std::map<VertexId, int> index;
  for (int q = 0; q < n; ++q) index[verts[q]] = q;

  std::vector<PauliString> rows;
  rows.reserve(n);
  for (int q = 0; q < n; ++q) {
    PauliString gen = PauliString::single_x(n, q);
    for (VertexId w : g.neighbors(verts[q])) {
      gen.z |= PauliString::bit(index[w]);
    }
    rows.push_back(gen);
  }
  return StabilizerTableau(std::move(rows), verts);
}

std::vector<OutcomeBranch> measure_pauli(const StabilizerTableau& t,
                                         VertexId vertex, PauliBasis basis) {
  const int n = t.num_qubits();
  const int q = t.qubit_of(vertex);
  const PauliString m = basis_operator(basis, n, q);

  std::vector<int> anticommuting;
  for (int k = 0; k < n; ++k) {
    if (!t.generators()[k].commutes_with(m)) anticommuting.push_back(k);
  }

  if (anticommuting.empty()) {
    // m (or -m) lies in the stabilizer group: deterministic outcome.
    Gf2Span span;
    for (int k = 0; k < n; ++k) {
      span.add(symplectic_bits(t.generators()[k]), std::uint64_t{1} << k);
    }
    auto combo = span.solve(symplectic_bits(m));
    if (!combo) {
      throw Error("commuting measurement operator not in stabilizer group");
    }
    PauliString prod = PauliString::identity(n);
    for (int k = 0; k < n; ++k) {
      if (*combo & (std::uint64_t{1} << k)) {
        prod = prod.multiplied_by(t.generators()[k]);
      }
    }
    OutcomeBranch branch;
    branch.sign = prod.phase_exp == m.phase_exp ? +1 : -1;
    branch.deterministic = true;
    branch.tableau = t;
    return {branch};
  }

  const int pivot = anticommuting.front();
  std::vector<OutcomeBranch> branches;
  for (int sign : {+1, -1}) {
    StabilizerTableau next = t;
    for (std::size_t k = 1; k < anticommuting.size(); ++k) {
      next.multiply_row(anticommuting[k], pivot);
    }
    PauliString outcome = m;
    if (sign < 0) outcome.negate();
    next.set_row(pivot, outcome);
    branches.push_back({sign, false, std::move(next)});
  }
  return branches;
}

StabilizerTableau discard_qubit(const StabilizerTableau& t, VertexId vertex) {
  const int n = t.num_qubits();
  const int q = t.qubit_of(vertex);
  StabilizerTableau work = t;

  auto x_bit = [&](int row) {
    return (work.generators()[row].x >> q) & 1;
  };
  auto z_bit = [&](int row) {
    return (work.generators()[row].z >> q) & 1;
  };

  int x_pivot = -1;
  for (int row = 0; row < n; ++row) {
    if (!x_bit(row)) continue;
    if (x_pivot < 0) {
      x_pivot = row;
    } else {
      work.multiply_row(row, x_pivot);
    }
  }
  int z_pivot = -1;
  for (int row = 0; row < n; ++row) {
    if (row == x_pivot || !z_bit(row)) continue;
    if (z_pivot < 0) {
      z_pivot = row;
    } else {
      work.multiply_row(row, z_pivot);
    }
  }

  if (x_pivot >= 0 && z_pivot >= 0) {
    throw NotFactorizedError("qubit for vertex " +
                             std::to_string(vertex.value) +
                             " is still entangled");
  }
  const int pivot = x_pivot >= 0 ? x_pivot : z_pivot;
  if (pivot < 0) {
    throw NotFactorizedError("no generator supports the discarded qubit");
  }

  // Cancel the pivot's support away from q using the q-free rows.
  const std::uint64_t q_mask = ~(static_cast<std::uint64_t>(PauliString::bit(q)) |
                                 (static_cast<std::uint64_t>(PauliString::bit(q)) << 32));
  Gf2Span span;
  for (int row = 0; row < n; ++row) {
    if (row == pivot) continue;
    span.add(symplectic_bits(work.generators()[row]), std::uint64_t{1} << row);
  }
  std::uint64_t target = symplectic_bits(work.generators()[pivot]) & q_mask;
  auto combo = span.solve(target);
  if (!combo) {
    throw NotFactorizedError("residual support on other qubits cannot be "
                             "cancelled; state not factorized");
  }
  for (int row = 0; row < n; ++row) {
    if (*combo & (std::uint64_t{1} << row)) work.multiply_row(pivot, row);
  }

  std::vector<PauliString> rows;
  std::vector<VertexId> verts;
  rows.reserve(n - 1);
  verts.reserve(n - 1);
  for (int row = 0; row < n; ++row) {
    if (row == pivot) continue;
    rows.push_back(work.generators()[row].dropped(q));
  }
  for (int k = 0; k < n; ++k) {
    if (k != q) verts.push_back(t.qubit_vertices()[k]);
  }
  return StabilizerTableau(std::move(rows), std::move(verts));
}

ExtractedGraph extract_graph(const StabilizerTableau& t) {
  const int n = t.num_qubits();
  StabilizerTableau work = t;
  LocalCliffordRecord record;

  auto note = [&](int qubit, char op) {
    record.ops[work.qubit_vertices()[qubit]] += op;
  };
  auto x_bit = [&](int row, int col) {
    return (work.generators()[row].x >> col) & 1;
  };
  auto z_bit = [&](int row, int col) {
    return (work.generators()[row].z >> col) & 1;
  };

  // Row-permuting Gauss-Jordan on the X block; returns rank and records
  // which columns got pivots.
  auto x_rref = [&]() {
    std::vector<bool> pivot_col(n, false);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
      int found = -1;
      for (int row = rank; row < n; ++row) {
        if (x_bit(row, col)) {
          found = row;
          break;
        }
      }
      if (found < 0) continue;
      work.swap_rows(rank, found);
      for (int row = 0; row < n; ++row) {
        if (row != rank && x_bit(row, col)) work.multiply_row(row, rank);
      }
      pivot_col[col] = true;
      ++rank;
    }
    return std::pair{rank, pivot_col};
  };

  for (int guard = 0; guard <= n; ++guard) {
    auto [rank, pivot_col] = x_rref();
    if (rank == n) break;
    if (guard == n) throw Error("graph extraction failed to reach full rank");
    // rows[rank..] are pure-Z; the first one has z support outside the
    // pivot columns, and a Hadamard there raises the X rank.
    int h_col = -1;
    for (int col = 0; col < n; ++col) {
      if (!pivot_col[col] && z_bit(rank, col)) {
        h_col = col;
        break;
      }
    }
    if (h_col < 0) throw Error("graph extraction: no Hadamard column found");
    work.apply_h(h_col);
    note(h_col, 'H');
  }

  // X block is now the identity; the Z block must be symmetric.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (z_bit(i, j) != z_bit(j, i)) {
        throw Error("graph extraction: asymmetric Z block");
      }
    }
  }
  for (int q = 0; q < n; ++q) {
    if (z_bit(q, q)) {
      work.apply_s(q);
      note(q, 'S');
    }
  }
  for (int q = 0; q < n; ++q) {
    if (work.generators()[q].sign() < 0) {
      work.apply_z(q);
      note(q, 'Z');
    }
  }

  Graph graph;
  for (int q = 0; q < n; ++q) graph.add_vertex(work.qubit_vertices()[q]);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (z_bit(i, j)) {
        graph.add_edge(work.qubit_vertices()[i], work.qubit_vertices()[j]);
      }
    }
  }
  return {std::move(graph), std::move(record)};
}

}  // namespace qweave
