// SPDX-License-Identifier: Apache-2.0
//
// Config-driven runs: build the system, resolve the target, anneal once per
// seed, and write trace_<seed>.csv, ansatz_<seed>.txt and summary.json.
#pragma once

#include "nrep/annealer.hpp"
#include "nrep/models.hpp"
#include "nrep/operator_pool.hpp"
#include "nrep/rdm.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nrep {

enum class SystemKind { Molecular, Bcs, Xxz };
enum class TargetSource { ExactGround, ExactExcited, File };

std::string_view to_string(SystemKind kind) noexcept;
std::string_view to_string(TargetSource source) noexcept;

struct ExperimentConfig {
  SystemKind system = SystemKind::Bcs;
  std::filesystem::path fcidump;  // molecular only
  int size = 4;                   // K: levels (BCS) or sites (XXZ)
  double coupling = 1.0;          // G
  double anisotropy = 2.0;        // Delta
  LevelScale level_scale = LevelScale::Scaled;

  TargetSource target_source = TargetSource::ExactGround;
  std::size_t excited_index = 1;
  std::filesystem::path target_file;
  TargetKind target_kind = TargetKind::Doci;
  double noise_epsilon = 0.0;
  std::uint64_t noise_seed = 12345;

  PoolKind pool = PoolKind::Pair;
  AnnealSchedule schedule;
  std::vector<std::uint64_t> seeds{1};
  std::filesystem::path output_dir = "out";

  ModelSpec model_spec() const;
  /// Canonical `key = value` text with every key; parses back to an equal config.
  std::string to_text() const;
};

/// Documented keys with their defaults, one per line (for --help).
std::string config_reference();

/// Throws ConfigError naming the key on unknown keys, bad values or an
/// incompatible system/target pair. Relative paths resolve against `base_dir`.
ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
ExperimentConfig parse_config(const std::filesystem::path& path);

/// Builds the model of `config`, honouring its level scale.
Model build_experiment_model(const ExperimentConfig& config);

/// Exact (optionally noisy) or file target for `config` on `model`.
RdmTarget resolve_target(const ExperimentConfig& config, const Model& model);

struct SeedOutcome {
  std::uint64_t seed = 0;
  bool completed = false;
  std::string error;  // set when the run aborted
  RunTrace trace;
};

struct ExperimentReport {
  double reference_distance = 0.0;  // exact state of the system vs the target
  std::vector<SeedOutcome> runs;
  std::filesystem::path summary_path;

  bool all_completed() const;
  double min_final_distance() const;
};

/// Runs every seed. A seed whose run aborts is recorded with its partial
/// trace; the remaining seeds still run.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// CSV `iter,proposed_op,proposed_theta,candidate_D,accepted,current_D,T,theta_max`.
/// Throws IoError if the file cannot be written.
void emit_trace(const RunTrace& trace, std::ostream& out);
void emit_trace(const RunTrace& trace, const std::filesystem::path& path);

}  // namespace nrep
