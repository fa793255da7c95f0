// SPDX-License-Identifier: Apache-2.0
//
// Simulated-annealing growth of an ansatz towards a target RDM.
//
// Each iteration draws one pool operator and an angle in [-theta_max,
// theta_max], evaluates the distance of the candidate state's RDM to the
// target, and accepts by the Metropolis rule on the change relative to the
// current accepted distance. Accepted candidates extend the ansatz and grow
// theta_max; rejected ones are discarded and shrink it. The temperature
// decays geometrically every iteration. The returned ansatz is the shortest
// accepted prefix attaining the lowest distance seen.
#pragma once

#include "nrep/ansatz.hpp"
#include "nrep/errors.hpp"
#include "nrep/operator_pool.hpp"
#include "nrep/random.hpp"
#include "nrep/rdm.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

namespace nrep {

struct AnnealSchedule {
  double t_initial = 0.01;
  double t_decay = 0.995;
  double theta_max_initial = 0.5;
  double theta_decay = 0.999;    // on reject
  double theta_growth = 1.0025;  // on accept
  double stall_epsilon = 1e-12;
  std::size_t stall_window = 1000;
  std::size_t max_iterations = 50000;
  std::uint64_t seed = 1;

  static constexpr double kThetaFloor = 1e-6;
  static constexpr double kThetaCeiling = 2.0;

  /// Throws DomainError unless 0 < t_decay < 1 < theta_growth, 0 < theta_decay < 1,
  /// t_initial >= 0 and the remaining fields are positive.
  void validate() const;
};

struct Proposal {
  std::size_t pool_index;
  double theta;
};

/// Uniform pool index, then uniform angle in [-theta_max, theta_max].
/// Throws DomainError for an empty pool or theta_max <= 0.
Proposal propose(Rng& rng, const OperatorPool& pool, double theta_max);

/// Metropolis rule. Always consumes exactly one draw so the stream position
/// does not depend on the outcome.
bool accept(double delta_distance, double temperature, Rng& rng);

/// Distance from a state's RDM (of the target's kind) to a fixed target.
class DistanceEvaluator {
 public:
  /// Throws DomainError if the target's shape does not fit the basis.
  DistanceEvaluator(BasisPtr basis, RdmTarget target);

  double operator()(const StateVector& state) const;
  const RdmTarget& target() const noexcept { return target_; }

 private:
  RdmExtractor extractor_;
  RdmTarget target_;
};

/// Distance after applying the candidate to `state`; `state` is unchanged.
double step_distance(const StateVector& state, const OperatorPool& pool, const Proposal& candidate,
                     const DistanceEvaluator& distance);
double step_distance(const StateVector& state, const OperatorPool& pool, const Proposal& candidate,
                     const RdmTarget& target);

struct TraceRecord {
  std::size_t iteration;
  std::size_t proposed_op;
  double proposed_theta;
  double candidate_distance;
  bool accepted;
  double current_distance;  // after the accept/reject decision
  double temperature;       // used for the decision
  double theta_max;         // used for the proposal
};

enum class Termination { Stalled, MaxIterations, NonFinite };

std::string_view to_string(Termination reason) noexcept;

struct RunTrace {
  std::vector<TraceRecord> records;
  double initial_distance = 0.0;
  double final_distance = 0.0;   // best distance, that of the returned ansatz
  double last_distance = 0.0;    // current accepted distance at termination
  std::size_t ansatz_length = 0;  // length of the returned (best) prefix
  std::size_t accepted_count = 0;
  Termination termination = Termination::MaxIterations;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;

  std::size_t proposals() const noexcept { return records.size(); }
};

struct AnnealProblem {
  std::shared_ptr<const OperatorPool> pool;
  StateVector initial_state;
  RdmTarget target;
};

struct RunResult {
  Ansatz ansatz;
  RunTrace trace;
};

/// Raised when a candidate distance is not finite; carries the run so far.
class AnnealAborted : public NumericalError {
 public:
  AnnealAborted(const std::string& what, RunResult partial)
      : NumericalError(what), partial_(std::move(partial)) {}
  const RunResult& partial() const noexcept { return partial_; }

 private:
  RunResult partial_;
};

/// Runs until the current distance has moved by at most stall_epsilon for
/// stall_window consecutive proposals, or max_iterations.
RunResult run(const AnnealProblem& problem, const AnnealSchedule& schedule);

}  // namespace nrep
