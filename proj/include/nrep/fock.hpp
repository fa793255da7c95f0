// SPDX-License-Identifier: Apache-2.0
//
// Occupation-number bases, state vectors and sector-restricted sparse
// operators.
//
// Encoding: mode 0 is the least significant bit of a Bitstring. The
// Jordan-Wigner string of a fermionic ladder operator on mode m counts the
// occupied modes with index strictly below m. Hard-core-boson ladder operators
// carry no sign. Molecular spin-orbitals are interleaved: (orbital p, alpha)
// is mode 2p and (p, beta) is mode 2p+1.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace nrep {

using Complex = std::complex<double>;
using Bitstring = std::uint32_t;

inline constexpr int kMaxModes = 24;

enum class SpaceKind { Fermion, HardCoreBoson };

/// Canonically ordered occupation bitstrings of one or more particle-number sectors.
class FockBasis {
 public:
  /// Single sector: all bitstrings of `num_modes` bits with `particle_count` set bits.
  static std::shared_ptr<const FockBasis> sector(SpaceKind kind, int num_modes, int particle_count);
  /// Union of several sectors (used transiently by ladder operators).
  static std::shared_ptr<const FockBasis> sectors(SpaceKind kind, int num_modes,
                                                  std::vector<int> particle_counts);
  /// The whole 2^num_modes space.
  static std::shared_ptr<const FockBasis> full(SpaceKind kind, int num_modes);

  SpaceKind kind() const noexcept { return kind_; }
  int num_modes() const noexcept { return num_modes_; }
  bool is_single_sector() const noexcept { return particle_counts_.size() == 1; }
  const std::vector<int>& particle_counts() const noexcept { return particle_counts_; }
  /// Particle count of a single-sector basis; throws DomainError for unions.
  int particle_count() const;

  std::size_t size() const noexcept { return states_.size(); }
  Bitstring state(std::size_t k) const { return states_.at(k); }
  std::span<const Bitstring> states() const noexcept { return states_; }
  std::optional<std::size_t> index_of(Bitstring bits) const noexcept;
  bool contains(Bitstring bits) const noexcept { return index_of(bits).has_value(); }

  /// Same kind, mode count and state list.
  bool same_as(const FockBasis& other) const noexcept;

 private:
  FockBasis(SpaceKind kind, int num_modes, std::vector<int> counts);

  SpaceKind kind_;
  int num_modes_;
  std::vector<int> particle_counts_;
  std::vector<Bitstring> states_;
};

using BasisPtr = std::shared_ptr<const FockBasis>;

/// Throws DomainError unless 0 <= particle_count <= num_modes <= kMaxModes.
BasisPtr build_basis(SpaceKind kind, int num_modes, int particle_count);

class StateVector {
 public:
  StateVector(BasisPtr basis, Eigen::VectorXcd amplitudes);

  /// Unit vector on one occupation string of the basis.
  static StateVector basis_state(BasisPtr basis, Bitstring bits);

  const FockBasis& basis() const noexcept { return *basis_; }
  const BasisPtr& basis_ptr() const noexcept { return basis_; }
  const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
  Eigen::VectorXcd& amplitudes() noexcept { return amplitudes_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  double norm() const { return amplitudes_.norm(); }
  void normalize();

 private:
  BasisPtr basis_;
  Eigen::VectorXcd amplitudes_;
};

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  Complex value;
};

/// Coordinate-format operator on one basis. Entries are kept sorted by
/// (row, col) with duplicates summed and exact zeros removed.
class SparseOperator {
 public:
  SparseOperator(BasisPtr basis, std::vector<SparseEntry> entries);

  static SparseOperator zero(BasisPtr basis);
  static SparseOperator identity(BasisPtr basis);

  const FockBasis& basis() const noexcept { return *basis_; }
  const BasisPtr& basis_ptr() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_->size(); }
  std::span<const SparseEntry> entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }

  Eigen::MatrixXcd to_dense() const;
  SparseOperator adjoint() const;
  /// Largest |entry|; zero for the empty operator.
  double max_abs() const noexcept;

  /// out = this * in. Sizes must match the basis; no allocation.
  void multiply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;

  friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
  friend SparseOperator operator*(Complex scale, const SparseOperator& a);
  /// Operator product a * b.
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);

 private:
  BasisPtr basis_;
  std::vector<SparseEntry> entries_;
};

enum class Ladder { Create, Annihilate };

struct LadderOp {
  int mode;
  Ladder kind;
};

inline LadderOp cr(int mode) { return {mode, Ladder::Create}; }
inline LadderOp an(int mode) { return {mode, Ladder::Annihilate}; }

/// Product of ladder operators written left to right as in the algebra
/// (a_i^+ a_j is {cr(i), an(j)}); the rightmost acts first.
struct LadderTerm {
  Complex coefficient;
  std::vector<LadderOp> ops;
};

/// Action of a ladder product on one occupation string: the resulting string
/// and its sign, or nullopt when the product annihilates it.
std::optional<std::pair<Bitstring, int>> act(SpaceKind kind, std::span<const LadderOp> ops,
                                             Bitstring bits) noexcept;

/// Full-space action of a sum of ladder products projected onto `basis`.
SparseOperator sector_matrix(const BasisPtr& basis, std::span<const LadderTerm> terms);

/// Single creation/annihilation operator, materialized on the union of the
/// sectors of `basis` and their neighbours N-1 and N+1.
SparseOperator ladder_matrix(const BasisPtr& basis, int mode, Ladder kind);

/// Projection of `op` onto the states of `target` (which must be a subset of op's basis).
SparseOperator restrict_to(const SparseOperator& op, const BasisPtr& target);

SparseOperator number_operator(const BasisPtr& basis, int mode);
SparseOperator total_number_operator(const BasisPtr& basis);

/// op * v. Throws ContractViolation on a basis mismatch.
StateVector apply(const SparseOperator& op, const StateVector& v);

/// <v|op|v>. Throws ContractViolation on a basis mismatch.
Complex expectation(const SparseOperator& op, const StateVector& v);

/// Throws ContractViolation unless the two bases are the same.
void require_same_basis(const FockBasis& a, const FockBasis& b, const char* what);

}  // namespace nrep
