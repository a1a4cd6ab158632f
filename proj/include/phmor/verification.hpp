// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "phmor/reduction.hpp"

namespace phmor {

/// p x p transfer matrix evaluator; SingularResolvent at a grid point is
/// caught by the sweeps and recorded as skipped.
using TransferFn = std::function<Mat(cd)>;

TransferFn transfer_fn(const PHSystem &sys);
TransferFn transfer_fn(const StateSpace &ss);
TransferFn transfer_fn(const ReductionResult &res);

/// pH-structure audit. Records residuals and eigenvalue extremes; never
/// throws.
struct StructureSection {
  std::size_t dim = 0;
  double skew_residual_j = 0.0;  // |J + J^H| / |J|
  double herm_residual_r = 0.0;  // |R - R^H| / |R|
  double herm_residual_h = 0.0;  // |H - H^H| / |H|
  double r_min_rel = 0.0;        // lambda_min(sym R) / |R|
  double h_min = 0.0;            // lambda_min(sym H)
  std::size_t j_rank = 0;
  std::optional<double> output_consistency;  // candidate audits only
  double tol = 0.0;
  bool pass = false;
};

StructureSection check_ph_structure(
    const Mat &j, const Mat &r, const Mat &h, double tol,
    std::optional<double> output_consistency = std::nullopt);
StructureSection check_ph_structure(const PHSystem &sys, double tol);

/// Positive-realness sweep: lambda_min(G(i w) + G(i w)^H) per frequency.
struct PrSweepSection {
  std::vector<double> omegas;
  std::vector<double> lambda_min;
  std::vector<std::size_t> skipped;  // pole-adjacent grid indices
  double min_lambda = 0.0;
  double max_gain = 0.0;  // max |G(i w)| over the grid
  double tol = 0.0;
  bool pass = false;
};

PrSweepSection positive_real_sweep(const TransferFn &g,
                                   const std::vector<double> &omegas,
                                   std::optional<double> tol = std::nullopt);

/// Recomputes both sides of G(s_m) u_m = G_r(s_m) u_m independently of the
/// residuals stored in the reduction result.
struct InterpolationSection {
  std::vector<PointResidual> residuals;
  double max_relative = 0.0;
  double tol = kInterpTol;
  bool pass = false;
};

InterpolationSection interpolation_report(const PHSystem &full,
                                          const ReductionResult &res,
                                          const InterpolationSet &interp,
                                          double tol = kInterpTol);

struct SweepRow {
  double omega;
  double g_norm;
  double gr_norm;
  double err_norm;
};

std::vector<SweepRow> frequency_sweep(const TransferFn &full,
                                      const TransferFn &reduced,
                                      const std::vector<double> &omegas);

/// RFC-4180-style CSV with a header row, 17 significant digits.
void write_sweep_csv(std::ostream &os, const std::vector<SweepRow> &rows,
                     bool with_reduced);

struct EnergySection {
  double slack = 0.0;
  double tol = 0.0;
  bool pass = false;
};

EnergySection audit_energy(const PHSystem &sys, const InputSignal &input,
                           const Vec &x0, double dt, std::size_t steps);

/// Machine-readable pass/fail ledger; every verdict is derivable from the
/// recorded numbers and tolerances alone.
struct VerificationReport {
  std::optional<StructureSection> structure_full;
  std::optional<StructureSection> structure_reduced;
  std::optional<InterpolationSection> interpolation;
  std::optional<PrSweepSection> pr_full;
  std::optional<PrSweepSection> pr_reduced;
  std::optional<EnergySection> energy;

  bool pass() const;
  std::vector<std::string> failed_sections() const;
  std::string to_json_string() const;
};

/// Logarithmic frequency grid, n points from w_min to w_max inclusive.
std::vector<double> log_grid(double w_min, double w_max, std::size_t n);
/// Grid resolved by points per decade.
std::vector<double> log_grid_per_decade(double w_min, double w_max,
                                        std::size_t per_decade);

}  // namespace phmor
