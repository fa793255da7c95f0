// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nrep/fock.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nrep {

enum class GeneratorKind { Single, Double, PairHop };

enum class PoolKind { GSD, GSDSpinFiltered, Pair };

std::string_view to_string(PoolKind kind) noexcept;
/// Accepts "gsd", "gsd_spin" and "pair"; throws DomainError otherwise.
PoolKind pool_kind_from_string(std::string_view name);

/// Anti-Hermitian generator restricted to the pool's sector.
///   Single  (i,k):     a_i^+ a_k - a_k^+ a_i
///   Double  (i,j,k,l): a_i^+ a_j^+ a_k a_l - a_k^+ a_l^+ a_i a_j
///   PairHop (i,j):     b_i^+ b_j - b_j^+ b_i
struct PoolOperator {
  GeneratorKind kind;
  std::vector<int> modes;
  SparseOperator matrix;
};

class OperatorPool {
 public:
  OperatorPool(PoolKind kind, BasisPtr basis, std::vector<PoolOperator> operators);

  PoolKind kind() const noexcept { return kind_; }
  const BasisPtr& basis_ptr() const noexcept { return basis_; }
  const FockBasis& basis() const noexcept { return *basis_; }
  std::size_t size() const noexcept { return operators_.size(); }
  bool empty() const noexcept { return operators_.empty(); }
  const std::vector<PoolOperator>& operators() const noexcept { return operators_; }

 private:
  PoolKind kind_;
  BasisPtr basis_;
  std::vector<PoolOperator> operators_;
};

/// Generalized singles i<k and doubles (i<j, k<l, (i,j)<(k,l)) on a fermionic
/// sector. Generators vanishing on the sector or duplicating an earlier one
/// (up to sign) are dropped. With `spin_filtered`, only generators whose
/// creators and annihilators contain the same number of alpha (even) modes
/// are kept.
OperatorPool build_gsd_pool(const BasisPtr& basis, bool spin_filtered);

/// All pair hops i<j on a hard-core-boson sector.
OperatorPool build_pair_pool(const BasisPtr& basis);

/// Pool of the given kind; GSD kinds need a fermionic basis, Pair a hard-core-boson one.
OperatorPool build_pool(PoolKind kind, const BasisPtr& basis);

/// Bounds-checked access; throws DomainError when out of range.
const PoolOperator& operator_at(const OperatorPool& pool, std::size_t index);

/// Human-readable label such as "D(0,1,4,5)".
std::string describe(const PoolOperator& op);

}  // namespace nrep
