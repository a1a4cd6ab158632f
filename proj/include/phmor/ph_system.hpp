// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "phmor/errors.hpp"
#include "phmor/la/mat.hpp"

namespace phmor {

using la::cd;
using la::Mat;
using la::Vec;

/// Relative structural tolerance: 100 * eps * dim, applied against
/// spectral-norm estimates.
double struct_tol(std::size_t dim);

/// Reciprocal-condition threshold below which a resolvent or step matrix is
/// declared singular.
inline constexpr double kTauSing = 1e-12;

/// Linear port-Hamiltonian system
///   x' = (J - R) H x + B u,   y = B^H H x
/// with skew-Hermitian full-rank J, Hermitian PSD R, Hermitian PD H.
/// Invariants are validated at construction (InvalidSystem on violation).
class PHSystem {
 public:
  PHSystem(Mat j, Mat r, Mat h, Mat b);

  const Mat &j() const { return j_; }
  const Mat &r() const { return r_; }
  const Mat &h() const { return h_; }
  const Mat &b() const { return b_; }

  std::size_t half_dim() const { return dim_ / 2; }
  std::size_t dim() const { return dim_; }
  std::size_t inputs() const { return inputs_; }

 private:
  Mat j_, r_, h_, b_;
  std::size_t dim_ = 0;
  std::size_t inputs_ = 0;
};

struct StateSpace {
  Mat a, b, c, d;
  std::size_t dim() const { return a.rows(); }
  std::size_t inputs() const { return b.cols(); }
};

/// A = (J - R) H, C = B^H H, D = 0.
StateSpace to_state_space(const PHSystem &sys);

/// y = G(s) u via one pivoted factorization of (sI - (J-R)H); throws
/// SingularResolvent when s is numerically an eigenvalue.
Vec transfer_eval(const PHSystem &sys, cd s, const Vec &u);

/// Full p x p transfer matrix at s.
Mat transfer_matrix(const PHSystem &sys, cd s);
Mat transfer_matrix(const StateSpace &ss, cd s);
Vec transfer_eval(const StateSpace &ss, cd s, const Vec &u);

/// H(x) = x^H H x / 2 (real part; imaginary part is roundoff by symmetry).
double hamiltonian(const PHSystem &sys, const Vec &x);

struct Trajectory {
  std::vector<double> times;
  std::vector<Vec> states;
  std::vector<Vec> outputs;
  std::vector<Vec> inputs;
  std::vector<double> energies;
};

using InputSignal = std::function<Vec(double)>;

InputSignal zero_input(std::size_t p);
InputSignal step_input(std::size_t p, double amplitude = 1.0,
                       double t_on = 0.0);
InputSignal sine_input(std::size_t p, double amplitude, double omega);

/// Implicit-midpoint integration. The step matrix (I - dt/2 A) is factored
/// once; inputs are evaluated at midpoints for stepping and at nodes for the
/// recorded trajectory.
Trajectory simulate(const PHSystem &sys, const InputSignal &input,
                    const Vec &x0, double dt, std::size_t steps);

/// Same stepper on an explicit realization; h_energy supplies the quadratic
/// form used for the recorded energies.
Trajectory simulate_lti(const Mat &a, const Mat &b, const Mat &c,
                        const Mat &h_energy, const InputSignal &input,
                        const Vec &x0, double dt, std::size_t steps);

/// Dissipation-inequality slack: trapezoid of Re(u^H y) minus the energy
/// increment. Nonnegative (within quadrature error) for passive systems.
double energy_audit(const Trajectory &traj);

/// Quadrature-error bound dt^2 * T * |H| * max |x|^2 used as the audit
/// tolerance.
double audit_tolerance(const Trajectory &traj, double h_norm);

}  // namespace phmor
