// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "phmor/errors.hpp"
#include "phmor/la/mat.hpp"

namespace phmor::symp {

using la::cd;
using la::Mat;
using la::Vec;

/// Relative tolerance for symplecticity certificates.
inline constexpr double kTauSymp = 1e-10;

/// Full-rank skew-Hermitian form matrix with its inverse cached at
/// construction.
class FormMatrix {
 public:
  /// Validates skew-Hermitian structure and invertibility; inverse via LU.
  explicit FormMatrix(Mat m);

  /// Canonical Poisson matrix [[0, I], [-I, 0]] of size 2*half, with the
  /// exact inverse -J.
  static FormMatrix canonical(std::size_t half);

  /// Form with a known exact inverse; validates m * minv = I to 1e-12.
  static FormMatrix with_inverse(Mat m, Mat minv);

  const Mat &m() const { return m_; }
  const Mat &inverse() const { return inv_; }
  std::size_t dim() const { return m_.rows(); }

 private:
  FormMatrix() = default;
  Mat m_, inv_;
};

/// Spec-facing alias for the canonical Poisson form.
FormMatrix canonical_j(std::size_t half);

/// Omega(u, v) = v^H M u. Linear in u, anti-linear in v, antisymmetric.
cd symplectic_form(const FormMatrix &form, const Vec &u, const Vec &v);

struct SymplecticCheck {
  bool ok;
  double residual;  // |Q^H F Q - f| / |f| in the spectral norm estimate
};

SymplecticCheck is_symplectic(const Mat &q, const FormMatrix &form_big,
                              const FormMatrix &form_small, double tol);

/// A certified (form_big, form_small)-symplectic matrix: Q^H F Q = f within
/// kTauSymp and full column rank (NotSymplectic otherwise).
class SymplecticMap {
 public:
  SymplecticMap(Mat q, FormMatrix form_big, FormMatrix form_small,
                double tol = kTauSymp);

  const Mat &q() const { return q_; }
  const FormMatrix &form_big() const { return big_; }
  const FormMatrix &form_small() const { return small_; }
  double residual() const { return residual_; }

 private:
  Mat q_;
  FormMatrix big_, small_;
  double residual_ = 0.0;
};

/// Structured left inverse f^{-1} Q^H F; satisfies L Q = I, L F^{-1} =
/// f^{-1} Q^H, L^H symplectic for the inverse form pair, and Q L v = v on
/// ran(Q).
Mat symplectic_inverse(const SymplecticMap &map);

/// Extended 4m-dimensional forms for the dissipative reformulation:
/// Jt = [[J, -I], [I, 0]] with inverse Kt = [[0, I], [-I, J]].
struct ExtendedForms {
  FormMatrix j_big, k_big;      // 4n
  FormMatrix j_small, k_small;  // 4k
};

ExtendedForms extend_forms(const FormMatrix &j2n, const FormMatrix &j2k);

/// Block projector blkdiag(Q1, Q2), certified (Kt_4n, Kt_4k)-symplectic.
/// Requires Q2 (J2n, J2k)-symplectic (NotSymplectic) and Q1^H Q2 = I
/// (NotLeftInverse).
struct ExtendedProjector {
  Mat q1, q2;
  FormMatrix j2n, j2k;
  ExtendedForms forms;
  SymplecticMap map;
};

ExtendedProjector extended_projector(Mat q1, Mat q2, FormMatrix j2n,
                                     FormMatrix j2k);

/// Closed-form symplectic inverse of the block projector:
/// [[Q2^H, J2k Q1^H - Q2^H J2n], [0, Q1^H]]. Coincides with
/// symplectic_inverse(proj.map); the off-diagonal block vanishes when
/// Q1^H = Q2^{-L} and annihilates ran(Q2) in general.
Mat extended_symplectic_inverse(const ExtendedProjector &proj);

}  // namespace phmor::symp
