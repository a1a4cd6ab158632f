// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "phmor/ph_system.hpp"

namespace phmor {

/// Anchored mass-spring-damper chain in (positions, momenta) ordering:
/// J = Jcan, H = blkdiag(K_chain, M^{-1}), R = blkdiag(0, D). Spring i
/// couples mass i to mass i-1 (mass 0 to the wall); dampers act to ground.
/// Forces enter on the masses listed in `forced` (default: the last one).
PHSystem gen_msd_chain(std::size_t n_masses, const std::vector<double> &masses,
                       const std::vector<double> &springs,
                       const std::vector<double> &dampers,
                       std::vector<std::size_t> forced = {});

/// Uniform-parameter convenience overload.
PHSystem gen_msd_chain(std::size_t n_masses, double mass, double spring,
                       double damper, std::vector<std::size_t> forced = {});

/// Random valid pH system, deterministic per seed: J = S - S^H (resampled
/// until full rank), R = M M^H, H = N N^H + eps I, B dense Gaussian.
PHSystem gen_random_ph(std::size_t n, std::size_t p, std::uint64_t seed);

}  // namespace phmor
