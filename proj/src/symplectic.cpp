// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/symplectic.hpp"

#include <sstream>

#include "phmor/la/lu.hpp"
#include "phmor/la/svd.hpp"
#include "phmor/ph_system.hpp"

namespace phmor::symp {

FormMatrix::FormMatrix(Mat m) {
  la::require(m.square(), "FormMatrix: square matrix required");
  const std::size_t dim = m.rows();
  const double tol = struct_tol(dim);
  const double nm = la::norm2_est(m);
  if (nm == 0.0 || la::norm2_est(m + m.adjoint()) > tol * nm) {
    throw NotSymplectic("FormMatrix: matrix is not skew-Hermitian", 0.0);
  }
  la::Lu lu = la::lu_factor(m);
  if (lu.singular || lu.rcond < kTauSing) {
    throw NotSymplectic("FormMatrix: matrix is numerically singular", 0.0);
  }
  inv_ = lu.solve(Mat::identity(dim));
  m_ = std::move(m);
  double res = la::norm2_est(matmul(inv_, m_) - Mat::identity(dim));
  if (res > 1e-12 * static_cast<double>(dim)) {
    std::ostringstream os;
    os << "FormMatrix: inverse validation failed (residual " << res << ")";
    throw NotSymplectic(os.str(), res);
  }
}

FormMatrix FormMatrix::canonical(std::size_t half) {
  la::require(half >= 1, "FormMatrix::canonical: half >= 1 required");
  const std::size_t n = 2 * half;
  Mat j(n, n);
  for (std::size_t i = 0; i < half; ++i) {
    j(i, half + i) = 1.0;
    j(half + i, i) = -1.0;
  }
  FormMatrix f;
  f.inv_ = -j;
  f.m_ = std::move(j);
  return f;
}

FormMatrix FormMatrix::with_inverse(Mat m, Mat minv) {
  la::require(m.square() && minv.square() && m.rows() == minv.rows(),
              "FormMatrix::with_inverse: shape mismatch");
  double res =
      la::norm2_est(matmul(m, minv) - Mat::identity(m.rows()));
  if (res > 1e-12 * static_cast<double>(m.rows())) {
    std::ostringstream os;
    os << "FormMatrix::with_inverse: stated inverse is wrong (residual "
       << res << ")";
    throw NotSymplectic(os.str(), res);
  }
  FormMatrix f;
  f.m_ = std::move(m);
  f.inv_ = std::move(minv);
  return f;
}

FormMatrix canonical_j(std::size_t half) { return FormMatrix::canonical(half); }

cd symplectic_form(const FormMatrix &form, const Vec &u, const Vec &v) {
  la::require(u.size() == form.dim() && v.size() == form.dim(),
              "symplectic_form: size mismatch");
  return vec_dotc(v, matvec(form.m(), u));
}

SymplecticCheck is_symplectic(const Mat &q, const FormMatrix &form_big,
                              const FormMatrix &form_small, double tol) {
  la::require(q.rows() == form_big.dim() && q.cols() == form_small.dim(),
              "is_symplectic: shape mismatch");
  Mat pulled = adj_mul(q, matmul(form_big.m(), q));
  double num = la::norm2_est(pulled - form_small.m());
  double den = la::norm2_est(form_small.m());
  double residual = den > 0.0 ? num / den : num;
  return {residual <= tol, residual};
}

SymplecticMap::SymplecticMap(Mat q, FormMatrix form_big, FormMatrix form_small,
                             double tol)
    : q_(std::move(q)), big_(std::move(form_big)), small_(std::move(form_small)) {
  SymplecticCheck check = is_symplectic(q_, big_, small_, tol);
  residual_ = check.residual;
  if (!check.ok) {
    std::ostringstream os;
    os << "SymplecticMap: Q^H F Q = f violated (residual " << check.residual
       << " > tol " << tol << ")";
    throw NotSymplectic(os.str(), check.residual);
  }
  double rank_tol = static_cast<double>(q_.rows()) * 2.220446049250313e-16;
  if (la::numerical_rank(q_, rank_tol) != q_.cols()) {
    throw NotSymplectic("SymplecticMap: Q is column rank deficient",
                        check.residual);
  }
}

Mat symplectic_inverse(const SymplecticMap &map) {
  return matmul(map.form_small().inverse(),
                adj_mul(map.q(), map.form_big().m()));
}

namespace {

// [[J, -I], [I, 0]] and its exact inverse [[0, I], [-I, J]].
std::pair<Mat, Mat> extended_pair(const Mat &j) {
  const std::size_t d = j.rows();
  Mat jt(2 * d, 2 * d);
  Mat kt(2 * d, 2 * d);
  jt.set_block(0, 0, j);
  kt.set_block(d, d, j);
  for (std::size_t i = 0; i < d; ++i) {
    jt(i, d + i) = -1.0;
    jt(d + i, i) = 1.0;
    kt(i, d + i) = 1.0;
    kt(d + i, i) = -1.0;
  }
  return {std::move(jt), std::move(kt)};
}

}  // namespace

ExtendedForms extend_forms(const FormMatrix &j2n, const FormMatrix &j2k) {
  auto [jt_big, kt_big] = extended_pair(j2n.m());
  auto [jt_small, kt_small] = extended_pair(j2k.m());
  ExtendedForms out{
      FormMatrix::with_inverse(jt_big, kt_big),
      FormMatrix::with_inverse(std::move(kt_big), std::move(jt_big)),
      FormMatrix::with_inverse(jt_small, kt_small),
      FormMatrix::with_inverse(std::move(kt_small), std::move(jt_small))};
  return out;
}

ExtendedProjector extended_projector(Mat q1, Mat q2, FormMatrix j2n,
                                     FormMatrix j2k) {
  la::require(q1.rows() == q2.rows() && q1.cols() == q2.cols(),
              "extended_projector: Q1/Q2 shape mismatch");
  la::require(q2.rows() == j2n.dim() && q2.cols() == j2k.dim(),
              "extended_projector: form dimensions do not match Q");
  SymplecticCheck check = is_symplectic(q2, j2n, j2k, kTauSymp);
  if (!check.ok) {
    std::ostringstream os;
    os << "extended_projector: Q2 is not (J_2n, J_2k)-symplectic (residual "
       << check.residual << ")";
    throw NotSymplectic(os.str(), check.residual);
  }
  double li_residual =
      la::norm2_est(adj_mul(q1, q2) - Mat::identity(q2.cols()));
  if (li_residual > kTauSymp) {
    std::ostringstream os;
    os << "extended_projector: Q1^H is not a left inverse of Q2 (residual "
       << li_residual << ")";
    throw NotLeftInverse(os.str(), li_residual);
  }
  ExtendedForms forms = extend_forms(j2n, j2k);
  Mat qe = blkdiag(q1, q2);
  SymplecticMap map(std::move(qe), forms.k_big, forms.k_small, kTauSymp);
  return ExtendedProjector{std::move(q1), std::move(q2), std::move(j2n),
                           std::move(j2k), std::move(forms), std::move(map)};
}

Mat extended_symplectic_inverse(const ExtendedProjector &proj) {
  const Mat &j2n = proj.j2n.m();
  const Mat &j2k = proj.j2k.m();
  Mat q1h = proj.q1.adjoint();
  Mat q2h = proj.q2.adjoint();
  Mat off = matmul(j2k, q1h) - matmul(q2h, j2n);
  const std::size_t rk = q1h.rows();  // 2k
  const std::size_t rn = q1h.cols();  // 2n
  Mat out(2 * rk, 2 * rn);
  out.set_block(0, 0, q2h);
  out.set_block(0, rn, off);
  out.set_block(rk, rn, q1h);
  return out;
}

}  // namespace phmor::symp
