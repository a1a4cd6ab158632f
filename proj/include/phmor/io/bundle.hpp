// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "phmor/reduction.hpp"

namespace phmor::io {

/// A system bundle is a directory with one Matrix Market file per matrix and
/// a bundle.json naming them. kind "ph" holds J, R, H, B; kind "state_space"
/// holds A, B, C plus the pH-candidate matrices used by the structure audit.
struct LoadedBundle {
  std::string name;
  std::string kind;   // "ph" | "state_space"
  std::string field;  // "real" | "complex"
  std::optional<PHSystem> ph;
  std::optional<StateSpace> ss;
  std::optional<Mat> cand_j, cand_r, cand_h;
};

void save_ph_bundle(const std::filesystem::path &dir, const std::string &name,
                    const PHSystem &sys);

/// Persists a reduction output: pH bundle for the symplectic paths, a
/// state-space bundle (with candidates) for the baseline path.
void save_reduced_bundle(const std::filesystem::path &dir,
                         const std::string &name, const ReductionResult &res);

/// Accepts the bundle directory or the bundle.json path itself.
LoadedBundle load_bundle(const std::filesystem::path &path);

std::string reduction_result_json(const ReductionResult &res);

}  // namespace phmor::io
