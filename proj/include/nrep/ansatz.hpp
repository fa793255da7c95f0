// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nrep/fock.hpp"
#include "nrep/operator_pool.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <vector>

namespace nrep {

inline constexpr double kExpTermThreshold = 1e-15;
inline constexpr int kExpMaxTerms = 60;

/// exp(theta * generator) v by Taylor series, stopping once a term's norm
/// drops below kExpTermThreshold. The result is renormalized to unit
/// norm. Throws NumericalError if the series has not converged after
/// kExpMaxTerms terms.
StateVector apply_exponential(const SparseOperator& generator, double theta, const StateVector& v);
StateVector apply_exponential(const PoolOperator& op, double theta, const StateVector& v);

struct AnsatzElement {
  std::size_t pool_index;
  double theta;

  friend bool operator==(const AnsatzElement&, const AnsatzElement&) = default;
};

/// Product of pool exponentials applied to a fixed initial state, element 0
/// first. Holds the evolved state alongside the element list.
class Ansatz {
 public:
  Ansatz(std::shared_ptr<const OperatorPool> pool, StateVector initial_state);

  const OperatorPool& pool() const noexcept { return *pool_; }
  const std::shared_ptr<const OperatorPool>& pool_ptr() const noexcept { return pool_; }
  const StateVector& initial_state() const noexcept { return initial_; }
  const StateVector& state() const noexcept { return current_; }
  const std::vector<AnsatzElement>& elements() const noexcept { return elements_; }
  std::size_t length() const noexcept { return elements_.size(); }

  /// New ansatz with `element` appended and `evolved` as its state; `evolved`
  /// must be exp(theta P) applied to state(). The rvalue overload reuses storage.
  Ansatz extend(const AnsatzElement& element, StateVector evolved) const&;
  Ansatz extend(const AnsatzElement& element, StateVector evolved) &&;

  /// Appends `element`, computing the evolved state.
  Ansatz extend(const AnsatzElement& element) const&;

  /// Keeps the first `length` elements; `state` must be their evolved state.
  Ansatz truncate(std::size_t length, StateVector state) &&;

 private:
  void check(const AnsatzElement& element, const StateVector& evolved) const;

  std::shared_ptr<const OperatorPool> pool_;
  StateVector initial_;
  std::vector<AnsatzElement> elements_;
  StateVector current_;
};

/// Replays every element from the initial state.
StateVector evolve_from_scratch(const Ansatz& ansatz);

/// Text form: header `NREP-ANSATZ v1 <pool_kind> <num_modes> <particle_count>`
/// then one `pool_index theta` line per element in application order.
void write_ansatz(const Ansatz& ansatz, std::ostream& out);
void write_ansatz(const Ansatz& ansatz, const std::filesystem::path& path);

/// Elements of an ansatz file; the header must match `pool`.
std::vector<AnsatzElement> read_ansatz_elements(std::istream& in, const OperatorPool& pool);
std::vector<AnsatzElement> read_ansatz_elements(const std::filesystem::path& path,
                                                const OperatorPool& pool);

}  // namespace nrep
