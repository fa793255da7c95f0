// SPDX-License-Identifier: Apache-2.0
//
// Benchmark Hamiltonians: molecular (FCIDUMP integrals on interleaved
// spin-orbitals), the reduced BCS pairing model and the open XXZ chain, the
// latter two in hard-core-boson form.
#pragma once

#include "nrep/fock.hpp"
#include "nrep/operator_pool.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace nrep {

/// FCIDUMP contents. Two-electron integrals are in chemists' notation (pq|rs)
/// with all eight permutations populated.
struct MolecularIntegrals {
  int num_orbitals = 0;
  int num_electrons = 0;
  int ms2 = 0;
  double core_energy = 0.0;
  Eigen::MatrixXd one_body;
  std::vector<double> two_body;

  double eri(int p, int q, int r, int s) const {
    const auto k = static_cast<std::size_t>(num_orbitals);
    return two_body[((static_cast<std::size_t>(p) * k + static_cast<std::size_t>(q)) * k +
                     static_cast<std::size_t>(r)) * k + static_cast<std::size_t>(s)];
  }
};

/// Throws ParseError on a malformed namelist, out-of-range index or missing
/// core-energy record.
MolecularIntegrals read_fcidump(std::istream& in);
MolecularIntegrals load_fcidump(const std::filesystem::path& path);

/// H = sum h_ij a_i^+ a_j + 1/4 sum <ij||kl> a_i^+ a_j^+ a_l a_k + E_core.
/// Throws DomainError unless the basis is fermionic with 2K modes and NELEC particles.
SparseOperator build_molecular_hamiltonian(const MolecularIntegrals& ints, const BasisPtr& basis);

/// Total spin S^2 for interleaved spin-orbitals.
SparseOperator spin_squared_operator(const BasisPtr& basis);

/// Single-particle energies of the pairing model: i/K (Scaled) or i (Unit), i = 1..K.
enum class LevelScale { Scaled, Unit };

std::vector<double> bcs_level_energies(int levels, LevelScale scale = LevelScale::Scaled);

/// H = sum_i e_i n_i - G sum_ij b_i^+ b_j on a half-filled hard-core-boson sector.
/// Throws DomainError for odd K or a basis that is not the K-level, K/2-pair sector.
SparseOperator build_bcs_hamiltonian(int levels, double coupling, const BasisPtr& basis,
                                     LevelScale scale = LevelScale::Scaled);

/// Chemical potential (e_M + e_{M+1})/2 at half filling.
double bcs_chemical_potential(int levels, LevelScale scale = LevelScale::Scaled);

/// Zero-gap critical coupling G_c = [sum_i 1/|e_i - mu|]^-1.
double bcs_critical_g(int levels, LevelScale scale = LevelScale::Scaled);

/// H = sum_i [ (b_i^+ b_{i+1} + h.c.)/2 + Delta (n_i - 1/2)(n_{i+1} - 1/2) ], open chain.
/// Valid on any hard-core-boson sector with K modes. Throws DomainError for K < 2.
SparseOperator build_xxz_hamiltonian(int sites, double anisotropy, const BasisPtr& basis);

struct Eigenpair {
  double value;
  StateVector vector;
};

/// Lowest `count` eigenpairs by dense diagonalization, ascending. Each
/// vector's largest-magnitude amplitude is made real and positive. Throws
/// DomainError if H is not Hermitian within 1e-10 or count exceeds the dimension.
std::vector<Eigenpair> exact_eigenstates(const SparseOperator& hamiltonian, std::size_t count);

/// Eigenpairs with <S^2> below 1e-6, lowest first, at most `count` of them.
std::vector<Eigenpair> singlet_eigenstates(const SparseOperator& hamiltonian,
                                           const SparseOperator& spin_squared, std::size_t count);

struct MolecularSystem {
  std::filesystem::path fcidump;
};
struct BcsSystem {
  int levels = 4;
  double coupling = 1.0;
};
struct XxzSystem {
  int sites = 4;
  double anisotropy = 2.0;
};

using ModelSpec = std::variant<MolecularSystem, BcsSystem, XxzSystem>;

/// Basis, Hamiltonian and default pool of a model.
struct Model {
  ModelSpec spec;
  BasisPtr basis;
  SparseOperator hamiltonian;
  PoolKind default_pool;
};

Model build_model(const ModelSpec& spec);

/// Starting state of a model:
///   molecular: determinant on the N lowest spin-orbitals (Hartree-Fock);
///   BCS: pairs on the M lowest levels (G = 0 ground state);
///   XXZ: (|0101> + |1010>)/sqrt(2), the large-Delta ground state.
/// Throws DomainError if the basis does not match the model's sector.
StateVector reference_state(const ModelSpec& spec, const BasisPtr& basis);

}  // namespace nrep
