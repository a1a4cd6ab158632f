// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/ph_system.hpp"

#include <cmath>
#include <sstream>

#include "phmor/la/eigh.hpp"
#include "phmor/la/lu.hpp"
#include "phmor/la/svd.hpp"

namespace phmor {

using la::lu_factor;
using la::Lu;

double struct_tol(std::size_t dim) {
  return 100.0 * 2.220446049250313e-16 * static_cast<double>(dim);
}

namespace {

std::string fmt_complex(cd s) {
  std::ostringstream os;
  os << s.real() << (s.imag() < 0 ? " - " : " + ") << std::abs(s.imag())
     << "i";
  return os.str();
}

Lu factor_resolvent(const Mat &a, cd s) {
  Mat m = Mat::identity(a.rows());
  m *= s;
  m -= a;
  Lu lu = lu_factor(m);
  if (lu.singular || lu.rcond < kTauSing) {
    std::ostringstream os;
    os << "resolvent (sI - A) numerically singular at s = " << fmt_complex(s)
       << " (rcond = " << lu.rcond
       << "); move the evaluation point off the spectrum";
    throw SingularResolvent(os.str());
  }
  return lu;
}

}  // namespace

PHSystem::PHSystem(Mat j, Mat r, Mat h, Mat b)
    : j_(std::move(j)), r_(std::move(r)), h_(std::move(h)), b_(std::move(b)) {
  if (!j_.square() || !r_.square() || !h_.square()) {
    throw InvalidSystem("PHSystem: J, R, H must be square");
  }
  dim_ = j_.rows();
  if (dim_ == 0 || dim_ % 2 != 0) {
    throw InvalidSystem("PHSystem: state dimension must be even and nonzero");
  }
  if (r_.rows() != dim_ || h_.rows() != dim_ || b_.rows() != dim_) {
    throw InvalidSystem("PHSystem: matrix dimensions do not conform");
  }
  inputs_ = b_.cols();
  if (inputs_ == 0) {
    throw InvalidSystem("PHSystem: input map B must have at least one column");
  }

  const double tol = struct_tol(dim_);
  const double nj = la::norm2_est(j_);
  if (nj == 0.0) {
    throw InvalidSystem("PHSystem: J is zero, hence not full rank");
  }
  if (la::norm2_est(j_ + j_.adjoint()) > tol * nj) {
    throw InvalidSystem("PHSystem: J is not skew-Hermitian within tolerance");
  }
  const double nr = la::norm2_est(r_);
  if (nr > 0.0) {
    if (la::norm2_est(r_ - r_.adjoint()) > tol * nr) {
      throw InvalidSystem("PHSystem: R is not Hermitian within tolerance");
    }
    if (la::min_eig_hermitian(r_) < -tol * nr) {
      throw InvalidSystem(
          "PHSystem: R is not positive semidefinite within tolerance");
    }
  }
  const double nh = la::norm2_est(h_);
  if (nh == 0.0 || la::norm2_est(h_ - h_.adjoint()) > tol * nh) {
    throw InvalidSystem("PHSystem: H is not Hermitian within tolerance");
  }
  if (la::min_eig_hermitian(h_) <= 0.0) {
    throw InvalidSystem("PHSystem: H is not positive definite");
  }
  if (la::numerical_rank(j_, static_cast<double>(dim_) * 2.220446049250313e-16) != dim_) {
    throw InvalidSystem("PHSystem: J is rank deficient");
  }
}

StateSpace to_state_space(const PHSystem &sys) {
  StateSpace ss;
  ss.a = matmul(sys.j() - sys.r(), sys.h());
  ss.b = sys.b();
  ss.c = adj_mul(sys.b(), sys.h());
  ss.d = Mat(sys.inputs(), sys.inputs());
  return ss;
}

Vec transfer_eval(const PHSystem &sys, cd s, const Vec &u) {
  la::require(u.size() == sys.inputs(), "transfer_eval: direction size");
  Mat a = matmul(sys.j() - sys.r(), sys.h());
  Lu lu = factor_resolvent(a, s);
  Vec x = lu.solve(matvec(sys.b(), u));
  return adj_matvec(sys.b(), matvec(sys.h(), x));
}

Mat transfer_matrix(const PHSystem &sys, cd s) {
  Mat a = matmul(sys.j() - sys.r(), sys.h());
  Lu lu = factor_resolvent(a, s);
  Mat x = lu.solve(sys.b());
  return adj_mul(sys.b(), matmul(sys.h(), x));
}

Mat transfer_matrix(const StateSpace &ss, cd s) {
  Lu lu = factor_resolvent(ss.a, s);
  Mat x = lu.solve(ss.b);
  Mat g = matmul(ss.c, x);
  if (!ss.d.empty()) {
    g += ss.d;
  }
  return g;
}

Vec transfer_eval(const StateSpace &ss, cd s, const Vec &u) {
  Lu lu = factor_resolvent(ss.a, s);
  Vec x = lu.solve(matvec(ss.b, u));
  Vec y = matvec(ss.c, x);
  if (!ss.d.empty()) {
    y = vec_add(std::move(y), matvec(ss.d, u));
  }
  return y;
}

double hamiltonian(const PHSystem &sys, const Vec &x) {
  la::require(x.size() == sys.dim(), "hamiltonian: state size");
  return 0.5 * vec_dotc(x, matvec(sys.h(), x)).real();
}

InputSignal zero_input(std::size_t p) {
  return [p](double) { return Vec(p, cd(0.0)); };
}

InputSignal step_input(std::size_t p, double amplitude, double t_on) {
  return [p, amplitude, t_on](double t) {
    return Vec(p, t >= t_on ? cd(amplitude) : cd(0.0));
  };
}

InputSignal sine_input(std::size_t p, double amplitude, double omega) {
  return [p, amplitude, omega](double t) {
    return Vec(p, cd(amplitude * std::sin(omega * t)));
  };
}

Trajectory simulate_lti(const Mat &a, const Mat &b, const Mat &c,
                        const Mat &h_energy, const InputSignal &input,
                        const Vec &x0, double dt, std::size_t steps) {
  if (!(dt > 0.0)) {
    throw InvalidParameter("simulate: dt must be positive");
  }
  la::require(x0.size() == a.rows(), "simulate: x0 size");
  const std::size_t n = a.rows();

  Mat m = Mat::identity(n);
  {
    Mat half = a;
    half *= cd(-0.5 * dt);
    m += half;
  }
  Lu lu = lu_factor(m);
  if (lu.singular || lu.rcond < kTauSing) {
    throw SingularStepMatrix(
        "simulate: step matrix (I - dt/2 A) is numerically singular; "
        "choose a different dt");
  }

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.outputs.reserve(steps + 1);
  traj.inputs.reserve(steps + 1);
  traj.energies.reserve(steps + 1);

  auto record = [&](double t, const Vec &x) {
    traj.times.push_back(t);
    traj.states.push_back(x);
    traj.outputs.push_back(matvec(c, x));
    traj.inputs.push_back(input(t));
    double e = h_energy.empty()
                   ? 0.0
                   : 0.5 * vec_dotc(x, matvec(h_energy, x)).real();
    traj.energies.push_back(e);
  };

  Vec x = x0;
  record(0.0, x);
  for (std::size_t k = 0; k < steps; ++k) {
    double t = static_cast<double>(k) * dt;
    Vec rhs = vec_add(x, vec_scale(cd(0.5 * dt), matvec(a, x)));
    Vec u_mid = input(t + 0.5 * dt);
    rhs = vec_add(std::move(rhs), vec_scale(cd(dt), matvec(b, u_mid)));
    x = lu.solve(std::move(rhs));
    record(static_cast<double>(k + 1) * dt, x);
  }
  return traj;
}

Trajectory simulate(const PHSystem &sys, const InputSignal &input,
                    const Vec &x0, double dt, std::size_t steps) {
  Mat a = matmul(sys.j() - sys.r(), sys.h());
  Mat c = adj_mul(sys.b(), sys.h());
  return simulate_lti(a, sys.b(), c, sys.h(), input, x0, dt, steps);
}

double energy_audit(const Trajectory &traj) {
  const std::size_t n = traj.times.size();
  if (n < 2) {
    return 0.0;
  }
  double supplied = 0.0;
  auto power = [&](std::size_t k) {
    return vec_dotc(traj.inputs[k], traj.outputs[k]).real();
  };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    double dtk = traj.times[k + 1] - traj.times[k];
    supplied += 0.5 * dtk * (power(k) + power(k + 1));
  }
  return supplied - (traj.energies.back() - traj.energies.front());
}

double audit_tolerance(const Trajectory &traj, double h_norm) {
  if (traj.times.size() < 2) {
    return 1e-300;
  }
  double dt = traj.times[1] - traj.times[0];
  double span = traj.times.back() - traj.times.front();
  double max_x2 = 0.0;
  for (const Vec &x : traj.states) {
    max_x2 = std::max(max_x2,
                      la::active_kernels().abs2sum(x.size(), x.data()));
  }
  return std::max(dt * dt * span * h_norm * max_x2, 1e-300);
}

}  // namespace phmor
