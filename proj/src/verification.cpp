// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <nlohmann/json.hpp>

#include "phmor/la/eigh.hpp"
#include "phmor/la/svd.hpp"
#include "phmor/parallel.hpp"

namespace phmor {

using nlohmann::json;

TransferFn transfer_fn(const PHSystem &sys) {
  StateSpace ss = to_state_space(sys);
  return [ss](cd s) { return transfer_matrix(ss, s); };
}

TransferFn transfer_fn(const StateSpace &ss) {
  return [ss](cd s) { return transfer_matrix(ss, s); };
}

TransferFn transfer_fn(const ReductionResult &res) {
  if (res.reduced_ph) {
    return transfer_fn(*res.reduced_ph);
  }
  if (res.reduced_ss) {
    return transfer_fn(*res.reduced_ss);
  }
  throw InvalidParameter("transfer_fn: empty reduction result");
}

StructureSection check_ph_structure(const Mat &j, const Mat &r, const Mat &h,
                                    double tol,
                                    std::optional<double> output_consistency) {
  StructureSection out;
  out.dim = j.rows();
  out.tol = tol;
  out.output_consistency = output_consistency;

  const double nj = la::norm2_est(j);
  out.skew_residual_j =
      nj > 0.0 ? la::norm2_est(j + j.adjoint()) / nj : 0.0;
  const double nr = la::norm2_est(r);
  out.herm_residual_r =
      nr > 0.0 ? la::norm2_est(r - r.adjoint()) / nr : 0.0;
  out.r_min_rel =
      nr > 0.0 ? la::min_eig_hermitian(r) / nr : 0.0;
  const double nh = la::norm2_est(h);
  out.herm_residual_h =
      nh > 0.0 ? la::norm2_est(h - h.adjoint()) / nh : 0.0;
  out.h_min = la::min_eig_hermitian(h);
  out.j_rank = la::numerical_rank(
      j, static_cast<double>(j.rows()) * 2.220446049250313e-16);

  out.pass = out.skew_residual_j <= tol && out.herm_residual_r <= tol &&
             out.herm_residual_h <= tol && out.r_min_rel >= -tol &&
             out.h_min > 0.0 && out.j_rank == out.dim &&
             (!out.output_consistency || *out.output_consistency <= tol);
  return out;
}

StructureSection check_ph_structure(const PHSystem &sys, double tol) {
  return check_ph_structure(sys.j(), sys.r(), sys.h(), tol);
}

PrSweepSection positive_real_sweep(const TransferFn &g,
                                   const std::vector<double> &omegas,
                                   std::optional<double> tol) {
  PrSweepSection out;
  out.omegas = omegas;
  out.lambda_min.assign(omegas.size(),
                        std::numeric_limits<double>::quiet_NaN());
  std::vector<double> gains(omegas.size(), 0.0);
  std::vector<char> skipped(omegas.size(), 0);

  parallel_for(omegas.size(), [&](std::size_t i) {
    try {
      Mat gm = g(cd(0.0, omegas[i]));
      out.lambda_min[i] = la::min_eig_hermitian(gm + gm.adjoint());
      gains[i] = la::norm2_est(gm);
    } catch (const SingularResolvent &) {
      skipped[i] = 1;
    }
  });

  out.min_lambda = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    if (skipped[i] != 0) {
      out.skipped.push_back(i);
      continue;
    }
    out.min_lambda = std::min(out.min_lambda, out.lambda_min[i]);
    out.max_gain = std::max(out.max_gain, gains[i]);
  }
  if (!std::isfinite(out.min_lambda)) {
    out.min_lambda = 0.0;  // every point skipped
  }
  out.tol = tol ? *tol : 1e-10 * std::max(out.max_gain, 1e-300);
  out.pass = out.min_lambda >= -out.tol;
  return out;
}

InterpolationSection interpolation_report(const PHSystem &full,
                                          const ReductionResult &res,
                                          const InterpolationSet &interp,
                                          double tol) {
  InterpolationSection out;
  out.tol = tol;
  out.residuals.resize(interp.size());
  for (std::size_t m = 0; m < interp.size(); ++m) {
    Vec g = transfer_eval(full, interp.points[m], interp.directions[m]);
    Vec gr = reduced_transfer_eval(res, interp.points[m],
                                   interp.directions[m]);
    double abs_err = vec_norm(vec_sub(g, gr));
    double scale = vec_norm(g);
    double rel = scale > 0.0 ? abs_err / scale
                             : (abs_err > 0.0
                                    ? std::numeric_limits<double>::infinity()
                                    : 0.0);
    out.residuals[m] = {interp.points[m], abs_err, rel};
    out.max_relative = std::max(out.max_relative, rel);
  }
  out.pass = out.max_relative <= tol;
  return out;
}

std::vector<SweepRow> frequency_sweep(const TransferFn &full,
                                      const TransferFn &reduced,
                                      const std::vector<double> &omegas) {
  std::vector<SweepRow> rows(omegas.size());
  parallel_for(omegas.size(), [&](std::size_t i) {
    SweepRow &row = rows[i];
    row.omega = omegas[i];
    row.g_norm = row.gr_norm = row.err_norm =
        std::numeric_limits<double>::quiet_NaN();
    try {
      Mat g = full(cd(0.0, omegas[i]));
      row.g_norm = la::norm2_est(g);
      if (reduced) {
        Mat gr = reduced(cd(0.0, omegas[i]));
        row.gr_norm = la::norm2_est(gr);
        row.err_norm = la::norm2_est(g - gr);
      }
    } catch (const SingularResolvent &) {
      // pole-adjacent grid point; row stays NaN-flagged
    }
  });
  return rows;
}

namespace {

void put_sci(std::ostream &os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  os << buf;
}

}  // namespace

void write_sweep_csv(std::ostream &os, const std::vector<SweepRow> &rows,
                     bool with_reduced) {
  os << (with_reduced ? "omega,norm_g,norm_gr,norm_err" : "omega,norm_g")
     << "\n";
  for (const SweepRow &row : rows) {
    put_sci(os, row.omega);
    os << ",";
    put_sci(os, row.g_norm);
    if (with_reduced) {
      os << ",";
      put_sci(os, row.gr_norm);
      os << ",";
      put_sci(os, row.err_norm);
    }
    os << "\n";
  }
}

EnergySection audit_energy(const PHSystem &sys, const InputSignal &input,
                           const Vec &x0, double dt, std::size_t steps) {
  Trajectory traj = simulate(sys, input, x0, dt, steps);
  EnergySection out;
  out.slack = energy_audit(traj);
  out.tol = audit_tolerance(traj, la::norm2_est(sys.h()));
  out.pass = out.slack >= -out.tol;
  return out;
}

bool VerificationReport::pass() const { return failed_sections().empty(); }

std::vector<std::string> VerificationReport::failed_sections() const {
  std::vector<std::string> failed;
  auto add = [&](const char *name, bool ok) {
    if (!ok) {
      failed.emplace_back(name);
    }
  };
  if (structure_full) {
    add("structure_full", structure_full->pass);
  }
  if (structure_reduced) {
    add("structure_reduced", structure_reduced->pass);
  }
  if (interpolation) {
    add("interpolation", interpolation->pass);
  }
  if (pr_full) {
    add("pr_full", pr_full->pass);
  }
  if (pr_reduced) {
    add("pr_reduced", pr_reduced->pass);
  }
  if (energy) {
    add("energy", energy->pass);
  }
  return failed;
}

namespace {

json to_json(const StructureSection &s) {
  json j{{"dim", s.dim},
         {"skew_residual_j", s.skew_residual_j},
         {"herm_residual_r", s.herm_residual_r},
         {"herm_residual_h", s.herm_residual_h},
         {"r_min_rel", s.r_min_rel},
         {"h_min", s.h_min},
         {"j_rank", s.j_rank},
         {"tol", s.tol},
         {"pass", s.pass}};
  if (s.output_consistency) {
    j["output_consistency"] = *s.output_consistency;
  }
  return j;
}

json to_json(const PrSweepSection &s) {
  return json{{"omega", s.omegas},
              {"lambda_min", s.lambda_min},
              {"skipped", s.skipped},
              {"min_lambda", s.min_lambda},
              {"max_gain", s.max_gain},
              {"tol", s.tol},
              {"pass", s.pass}};
}

json to_json(const InterpolationSection &s) {
  json pts = json::array();
  for (const PointResidual &r : s.residuals) {
    pts.push_back(json{{"point", {r.point.real(), r.point.imag()}},
                       {"absolute", r.absolute},
                       {"relative", r.relative}});
  }
  return json{{"residuals", pts},
              {"max_relative", s.max_relative},
              {"tol", s.tol},
              {"pass", s.pass}};
}

json to_json(const EnergySection &s) {
  return json{{"slack", s.slack}, {"tol", s.tol}, {"pass", s.pass}};
}

}  // namespace

std::string VerificationReport::to_json_string() const {
  json j;
  if (structure_full) {
    j["structure_full"] = to_json(*structure_full);
  }
  if (structure_reduced) {
    j["structure_reduced"] = to_json(*structure_reduced);
  }
  if (interpolation) {
    j["interpolation"] = to_json(*interpolation);
  }
  if (pr_full) {
    j["pr_full"] = to_json(*pr_full);
  }
  if (pr_reduced) {
    j["pr_reduced"] = to_json(*pr_reduced);
  }
  if (energy) {
    j["energy"] = to_json(*energy);
  }
  j["verdict"] = json{{"pass", pass()},
                      {"failed_sections", failed_sections()}};
  return j.dump(2);
}

std::vector<double> log_grid(double w_min, double w_max, std::size_t n) {
  la::require(w_min > 0.0 && w_max > w_min && n >= 2,
              "log_grid: need 0 < w_min < w_max and n >= 2");
  std::vector<double> grid(n);
  double l0 = std::log10(w_min);
  double l1 = std::log10(w_max);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = std::pow(
        10.0, l0 + (l1 - l0) * static_cast<double>(i) /
                       static_cast<double>(n - 1));
  }
  return grid;
}

std::vector<double> log_grid_per_decade(double w_min, double w_max,
                                        std::size_t per_decade) {
  la::require(per_decade >= 1, "log_grid_per_decade: per_decade >= 1");
  double decades = std::log10(w_max) - std::log10(w_min);
  auto n = static_cast<std::size_t>(
      std::ceil(decades * static_cast<double>(per_decade))) + 1;
  return log_grid(w_min, w_max, std::max<std::size_t>(n, 2));
}

}  // namespace phmor
