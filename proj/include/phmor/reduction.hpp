// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "phmor/interpolation.hpp"

namespace phmor {

enum class ReductionMethod { baseline, lossless, dissipative };

std::string_view method_name(ReductionMethod m);
ReductionMethod method_from_name(std::string_view name);

/// Per-point interpolation error of the reduced transfer function.
struct PointResidual {
  cd point;
  double absolute = 0.0;
  double relative = 0.0;
};

inline constexpr double kInterpTol = 1e-8;

struct ReductionResult {
  ReductionMethod method = ReductionMethod::dissipative;

  std::optional<PHSystem> reduced_ph;   // symplectic paths
  std::optional<StateSpace> reduced_ss; // baseline path
  std::optional<SymplecticProjector> projector;

  std::vector<PointResidual> residuals;
  double interpolation_tolerance = kInterpTol;
  bool degraded = false;  // some residual exceeded the tolerance

  struct Diagnostics {
    double h_min = 0.0;          // lambda_min of the reduced energy weight
    double r_min = 0.0;          // lambda_min of sym(R̂)
    double skew_residual = 0.0;  // |Ĵ + Ĵ^H| / |Ĵ|
    double pencil_rcond = 1.0;
    double basis_residual = 0.0;  // symplecticity certificate of the basis
  } diag;

  // Baseline only: pH-shaped candidate (J_r, R_r, H_r) extracted from the
  // unstructured realization for the structure audit, plus the output-map
  // consistency residual |C_r - B_r^H H_r| / |C_r|.
  std::optional<Mat> cand_j, cand_r, cand_h;
  double output_consistency = 0.0;

  std::size_t reduced_dim() const;
};

/// Petrov-Galerkin projection normalized by (W^H V)^{-1}; throws
/// SingularPencil when the pencil is numerically singular.
StateSpace project_state_space(const StateSpace &ss, const Mat &v,
                               const Mat &w);

/// Unstructured rational interpolant: V from the resolvent columns, W = V by
/// default (Galerkin). Matches G at the interpolation data but preserves no
/// structure in general.
ReductionResult reduce_baseline(const StateSpace &ss,
                                const InterpolationSet &interp,
                                const Mat *w_choice = nullptr);

/// Baseline on a pH system: same reduction on (J-R)H, plus the pH-candidate
/// extraction for the structure audit.
ReductionResult reduce_baseline(const PHSystem &sys,
                                const InterpolationSet &interp,
                                const Mat *w_choice = nullptr);

/// Structure-preserving reduction for R = 0 via a single
/// (K_2n, K_2k)-symplectic basis; throws NotLossless when R != 0.
ReductionResult reduce_lossless(const PHSystem &sys,
                                const InterpolationSet &interp);

/// Structure-preserving reduction with dissipation via the (Q1, Q2) pair:
/// Ĵ = Jcan, R̂ = Q2^H R Q2, Ĥ = Q1^H H Q1, B̂ = Q2^H B.
ReductionResult reduce_dissipative(const PHSystem &sys,
                                   const InterpolationSet &interp);

Vec reduced_transfer_eval(const ReductionResult &res, cd s, const Vec &u);
Mat reduced_transfer_matrix(const ReductionResult &res, cd s);

}  // namespace phmor
