// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "phmor/interpolation.hpp"

namespace phmor::io {

struct SweepSpec {
  double omega_min = 1e-2;
  double omega_max = 1e2;
  std::size_t points_per_decade = 50;
};

struct SimulateSpec {
  double dt = 1e-3;
  std::size_t steps = 10000;
  std::string input_type = "step";  // zero | step | sine
  double amplitude = 1.0;
  double omega = 1.0;
  double t_on = 0.0;
  std::vector<cd> x0;  // empty = origin
};

struct Tolerances {
  double tau_struct = 0.0;  // 0 = dimension-based default
  double tau_symp = symp::kTauSymp;
  double interpolation = kInterpTol;
};

struct GeneratorSpec {
  std::string type;  // msd_chain | random
  std::string name = "system";
  // msd_chain
  std::size_t n_masses = 1;
  std::vector<double> masses{1.0}, springs{1.0}, dampers{0.0};
  std::vector<std::size_t> forced;
  // random
  std::size_t n = 1, p = 1;
  std::uint64_t seed = 0;
};

struct RunConfig {
  std::filesystem::path base_dir;  // config file directory; anchors paths

  std::optional<std::string> system;
  std::vector<cd> points;
  std::optional<std::vector<Vec>> directions;  // nullopt = canonical policy
  std::string method = "dissipative";
  SweepSpec sweep;
  SimulateSpec simulate;
  Tolerances tolerances;
  std::string output_dir = "out";
  std::optional<std::string> reduced;
  std::optional<GeneratorSpec> generator;

  std::string hash;  // FNV-1a over the semantic fields

  std::filesystem::path resolve(const std::string &rel) const;
  std::filesystem::path resolved_output_dir() const;

  /// Interpolation set with the canonical direction policy applied.
  InterpolationSet interpolation_set(std::size_t p) const;
};

RunConfig load_run_config(const std::filesystem::path &path);

/// p + M must be even for the symplectic reductions; ConfigError with an
/// actionable message otherwise.
void validate_parity(const RunConfig &cfg, std::size_t p);

void write_manifest(const std::filesystem::path &output_dir,
                    const std::string &command, const RunConfig &cfg,
                    const std::vector<std::string> &outputs);

}  // namespace phmor::io
