// SPDX-License-Identifier: Apache-2.0
//
// Reduced density matrices of pure states and the Hilbert-Schmidt cost.
//
// Normalizations: the 1-RDM has trace N and the 2-RDM pair trace N(N-1).
//   Rdm1(i,j)     = <a_i^+ a_j>
//   Rdm2(i,j,k,l) = <a_i^+ a_j^+ a_l a_k>, composite row (i,j), column (k,l)
//   DOCI blocks   Pi(i,j) = <b_i^+ b_j>,  D(i,j) = <n_i n_j>
#pragma once

#include "nrep/fock.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nrep {

enum class TargetKind { Rdm1, Rdm2, Doci };

std::string_view to_string(TargetKind kind) noexcept;
/// "rdm1", "rdm2" or "doci"; throws DomainError otherwise.
TargetKind target_kind_from_string(std::string_view name);

struct Rdm1 {
  Eigen::MatrixXcd matrix;
};

/// Stored as the (m^2 x m^2) composite matrix.
class Rdm2 {
 public:
  explicit Rdm2(int num_modes);
  explicit Rdm2(Eigen::MatrixXcd composite);

  int num_modes() const noexcept { return modes_; }
  Complex operator()(int i, int j, int k, int l) const { return composite_(pair(i, j), pair(k, l)); }
  Complex& operator()(int i, int j, int k, int l) { return composite_(pair(i, j), pair(k, l)); }
  const Eigen::MatrixXcd& composite() const noexcept { return composite_; }
  Eigen::MatrixXcd& composite() noexcept { return composite_; }

  /// Sum_ij (i,j,i,j).
  Complex pair_trace() const { return composite_.trace(); }
  /// Partial trace C(i,k) = Sum_j (i,j,k,j); equals (N-1) Rdm1 for a physical 2-RDM.
  Eigen::MatrixXcd contract() const;

 private:
  Eigen::Index pair(int i, int j) const noexcept {
    return static_cast<Eigen::Index>(i) * modes_ + static_cast<Eigen::Index>(j);
  }

  int modes_;
  Eigen::MatrixXcd composite_;
};

struct DociBlocks {
  Eigen::MatrixXcd pi;
  Eigen::MatrixXcd d;
};

using RdmPayload = std::variant<Rdm1, Rdm2, DociBlocks>;

TargetKind kind_of(const RdmPayload& payload) noexcept;
/// Mode (or level) count implied by the payload's shape.
int modes_of(const RdmPayload& payload) noexcept;

/// A fixed p-body matrix to approach; no physicality is assumed.
struct RdmTarget {
  RdmPayload payload;
  int num_modes = 0;
  int particles = 0;
  std::string provenance;
  double noise_epsilon = 0.0;

  TargetKind kind() const noexcept { return kind_of(payload); }
};

/// Precomputed ladder maps for one basis; extraction is then allocation-light.
/// Build once per basis when evaluating many states.
class RdmExtractor {
 public:
  explicit RdmExtractor(BasisPtr basis);

  const FockBasis& basis() const noexcept { return *basis_; }

  Rdm1 rdm1(const StateVector& v) const;
  Rdm2 rdm2(const StateVector& v) const;
  DociBlocks doci(const StateVector& v) const;
  RdmPayload extract(TargetKind kind, const StateVector& v) const;

 private:
  struct Move {
    std::uint32_t from;
    std::uint32_t to;
    double sign;
  };
  // One list of moves per removed mode (1-RDM, DOCI) or per removed pair k<l (2-RDM).
  struct LadderMap {
    std::size_t target_dim = 0;
    std::vector<std::vector<Move>> moves;
  };

  Eigen::MatrixXcd images(const LadderMap& map, const StateVector& v) const;

  BasisPtr basis_;
  LadderMap single_;
  LadderMap pairs_;
};

/// Throws DomainError on a hard-core-boson basis.
Rdm1 compute_rdm1(const StateVector& v);
/// Throws DomainError on a hard-core-boson basis or fewer than two particles.
Rdm2 compute_rdm2(const StateVector& v);
/// Throws DomainError on a fermionic basis.
DociBlocks compute_doci_blocks(const StateVector& v);
RdmPayload extract(TargetKind kind, const StateVector& v);

/// Sum of squared moduli of the elementwise difference (the two DOCI blocks
/// are summed with equal weight). Throws DomainError on mismatched shapes.
double hs_distance(const RdmPayload& a, const RdmPayload& b);

/// Random matrix R of the payload's shape: entries uniform in [-1,1], drawn
/// row-major from a generator seeded with `seed`, then symmetrized as
/// (R + R^T)/2. Rdm2 noise lives on the composite matrix; DOCI draws Pi then D.
RdmPayload noise_pattern(const RdmPayload& shape, std::uint64_t seed);

/// x + scale * y for payloads of the same shape.
RdmPayload axpy(const RdmPayload& x, double scale, const RdmPayload& y);

/// exact + epsilon * noise_pattern(exact, seed). Throws DomainError for epsilon < 0.
RdmTarget add_noise(const RdmTarget& exact, double epsilon, std::uint64_t seed);

/// Target file `NREP-TARGET v1`; see README for the body layout.
void write_target(const RdmTarget& target, std::ostream& out);
void write_target(const RdmTarget& target, const std::filesystem::path& path);
/// Throws ParseError (with line number) on malformed input.
RdmTarget read_target(std::istream& in);
RdmTarget read_target(const std::filesystem::path& path);

struct TargetDiagnostics {
  TargetKind kind;
  int num_modes;
  int particles;
  double hermiticity_error;   // max |A - A^+| over all blocks
  double trace;               // Rdm1: trace; Rdm2: pair trace; DOCI: trace(Pi)
  double expected_trace;      // N, N(N-1) or M
  double min_eigenvalue;      // of the Hermitian part (Pi for DOCI)
  double max_eigenvalue;
};

TargetDiagnostics diagnose(const RdmTarget& target);

}  // namespace nrep
