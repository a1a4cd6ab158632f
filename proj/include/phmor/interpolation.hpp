// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "phmor/ph_system.hpp"
#include "phmor/symplectic.hpp"

namespace phmor {

/// Interpolation data: frequencies s_m and tangent directions u_m.
struct InterpolationSet {
  std::vector<cd> points;
  std::vector<Vec> directions;

  InterpolationSet(std::vector<cd> pts, std::vector<Vec> dirs);

  /// Directions cycling through the standard basis: u_m = e_{1+((m-1) mod p)}.
  static InterpolationSet canonical(std::vector<cd> pts, std::size_t p);

  std::size_t size() const { return points.size(); }
};

/// Which pencil the Krylov columns are built from. The interpolation theory
/// requires the full dynamics (J - R)H; the interconnection-only variant
/// J H is kept for comparison (both coincide when R = 0).
enum class ResolventKind { full_dynamics, interconnection_only };

/// X with column m = (s_m I - A_eff)^{-1} B u_m.
Mat krylov_block(const PHSystem &sys, const InterpolationSet &interp,
                 ResolventKind kind = ResolventKind::full_dynamics);

struct VwPair {
  Mat v;  // [B X]
  Mat w;  // H V
};

/// V = [B X], W = H V. Requires p + M even (OddDimension) and [B X] of full
/// column rank (RankDeficient names the offending column).
VwPair assemble_vw(const PHSystem &sys, const Mat &x);

struct InertiaTriple {
  std::size_t n_plus = 0, n_minus = 0, n_zero = 0;
  bool operator==(const InertiaTriple &) const = default;
};

/// Eigenvalue signature of a Hermitian matrix; counts against tol * |S|.
InertiaTriple inertia(const Mat &s, double tol);

/// Invertible A with A^H S A = i*Jcan for Hermitian S of inertia (k, k, 0);
/// throws WrongInertia with the measured triple otherwise.
Mat congruence_to_canonical(const Mat &s);

/// The pair (Q1, Q2) with Q2 (J_2n, Jcan_2k)-symplectic, Q1^H Q2 = I,
/// ran(Q1) = ran(V), ran(Q2) = ran(W), plus the certificates tying them
/// together.
struct SymplecticProjector {
  Mat q1, q2;
  symp::FormMatrix j_small;

  struct Certificates {
    double symplectic_residual = 0.0;
    double left_inverse_residual = 0.0;
    double range_residual_max = 0.0;
    double pencil_rcond = 0.0;
  } cert;
};

SymplecticProjector build_projector(const PHSystem &sys,
                                    const InterpolationSet &interp);

/// Single-basis construction: Q = V A certified (form_big, target)-symplectic
/// with ran(Q) = ran(V). Default target is the canonical Poisson form.
symp::SymplecticMap make_symplectic_basis(const Mat &v,
                                          const symp::FormMatrix &form_big);
symp::SymplecticMap make_symplectic_basis(const Mat &v,
                                          const symp::FormMatrix &form_big,
                                          const symp::FormMatrix &target);

}  // namespace phmor
