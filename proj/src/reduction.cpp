// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/reduction.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "phmor/la/eigh.hpp"
#include "phmor/la/lu.hpp"
#include "phmor/parallel.hpp"

namespace phmor {

using la::Lu;

std::string_view method_name(ReductionMethod m) {
  switch (m) {
    case ReductionMethod::baseline:
      return "baseline";
    case ReductionMethod::lossless:
      return "lossless";
    case ReductionMethod::dissipative:
      return "dissipative";
  }
  return "unknown";
}

ReductionMethod method_from_name(std::string_view name) {
  if (name == "baseline") {
    return ReductionMethod::baseline;
  }
  if (name == "lossless") {
    return ReductionMethod::lossless;
  }
  if (name == "dissipative") {
    return ReductionMethod::dissipative;
  }
  throw ConfigError("unknown reduction method: " + std::string(name) +
                    " (expected baseline, lossless or dissipative)");
}

std::size_t ReductionResult::reduced_dim() const {
  if (reduced_ph) {
    return reduced_ph->dim();
  }
  if (reduced_ss) {
    return reduced_ss->dim();
  }
  return 0;
}

namespace {

Mat krylov_block_ss(const Mat &a, const Mat &b, const InterpolationSet &interp) {
  Mat x(a.rows(), interp.size());
  parallel_for(interp.size(), [&](std::size_t m) {
    Mat shifted = Mat::identity(a.rows());
    shifted *= interp.points[m];
    shifted -= a;
    Lu lu = la::lu_factor(shifted);
    if (lu.singular || lu.rcond < kTauSing) {
      std::ostringstream os;
      os << "reduce_baseline: interpolation point " << m
         << " is numerically an eigenvalue of A (rcond = " << lu.rcond << ")";
      throw SingularResolvent(os.str());
    }
    x.set_col(m, lu.solve(matvec(b, interp.directions[m])));
  });
  return x;
}

template <typename FullEval, typename ReducedEval>
void fill_residuals(ReductionResult &res, const InterpolationSet &interp,
                    FullEval &&full, ReducedEval &&reduced) {
  res.residuals.resize(interp.size());
  for (std::size_t m = 0; m < interp.size(); ++m) {
    Vec g = full(interp.points[m], interp.directions[m]);
    Vec gr = reduced(interp.points[m], interp.directions[m]);
    double abs_err = vec_norm(vec_sub(g, gr));
    double scale = vec_norm(g);
    double rel = scale > 0.0 ? abs_err / scale
                             : (abs_err > 0.0
                                    ? std::numeric_limits<double>::infinity()
                                    : 0.0);
    res.residuals[m] = {interp.points[m], abs_err, rel};
    if (rel > res.interpolation_tolerance) {
      res.degraded = true;
    }
  }
}

}  // namespace

StateSpace project_state_space(const StateSpace &ss, const Mat &v,
                               const Mat &w) {
  la::require(v.rows() == ss.dim() && w.rows() == ss.dim() &&
                  v.cols() == w.cols(),
              "project_state_space: basis shape mismatch");
  Mat pencil = adj_mul(w, v);
  Lu lu = la::lu_factor(pencil);
  if (lu.singular || lu.rcond < kTauSing) {
    std::ostringstream os;
    os << "project_state_space: W^H V is numerically singular (rcond = "
       << lu.rcond << ")";
    throw SingularPencil(os.str());
  }
  StateSpace red;
  red.a = lu.solve(adj_mul(w, matmul(ss.a, v)));
  red.b = lu.solve(adj_mul(w, ss.b));
  red.c = matmul(ss.c, v);
  red.d = ss.d;
  return red;
}

namespace {

ReductionResult baseline_core(const StateSpace &ss,
                              const InterpolationSet &interp,
                              const Mat *w_choice, Mat *v_out) {
  Mat v = krylov_block_ss(ss.a, ss.b, interp);
  const Mat &w = w_choice != nullptr ? *w_choice : v;
  ReductionResult res;
  res.method = ReductionMethod::baseline;
  res.reduced_ss = project_state_space(ss, v, w);
  fill_residuals(
      res, interp,
      [&](cd s, const Vec &u) { return transfer_eval(ss, s, u); },
      [&](cd s, const Vec &u) { return transfer_eval(*res.reduced_ss, s, u); });
  if (v_out != nullptr) {
    *v_out = std::move(v);
  }
  return res;
}

}  // namespace

ReductionResult reduce_baseline(const StateSpace &ss,
                                const InterpolationSet &interp,
                                const Mat *w_choice) {
  return baseline_core(ss, interp, w_choice, nullptr);
}

ReductionResult reduce_baseline(const PHSystem &sys,
                                const InterpolationSet &interp,
                                const Mat *w_choice) {
  StateSpace ss = to_state_space(sys);
  Mat v;
  ReductionResult res = baseline_core(ss, interp, w_choice, &v);

  // pH-shaped candidate for the structure audit: take the Galerkin energy
  // H_r = V^H H V (positive definite by construction) and split
  // A_r H_r^{-1} into its skew and Hermitian parts. For an unstructured
  // reduction the Hermitian part is generically indefinite and the output
  // map inconsistent, which is what the audit detects.
  Mat h_r = adj_mul(v, matmul(sys.h(), v));
  Lu lu = la::lu_factor(h_r);
  if (!lu.singular && lu.rcond >= kTauSing) {
    Mat x = lu.solve(res.reduced_ss->a.adjoint()).adjoint();  // A_r H_r^{-1}
    res.cand_j = skew_part(x);
    res.cand_r = -hermitian_part(x);
    res.cand_h = h_r;
    double nc = la::norm2_est(res.reduced_ss->c);
    Mat mismatch = res.reduced_ss->c - adj_mul(res.reduced_ss->b, h_r);
    res.output_consistency =
        nc > 0.0 ? la::norm2_est(mismatch) / nc : la::norm2_est(mismatch);
    res.diag.h_min = la::min_eig_hermitian(h_r);
    res.diag.r_min = la::min_eig_hermitian(*res.cand_r);
    double njc = la::norm2_est(*res.cand_j);
    res.diag.skew_residual =
        njc > 0.0
            ? la::norm2_est(*res.cand_j + res.cand_j->adjoint()) / njc
            : 0.0;
  }
  return res;
}

ReductionResult reduce_lossless(const PHSystem &sys,
                                const InterpolationSet &interp) {
  const double scale =
      std::max(la::norm2_est(sys.j()), la::norm2_est(sys.h()));
  const double nr = la::norm2_est(sys.r());
  if (nr > struct_tol(sys.dim()) * scale) {
    std::ostringstream os;
    os << "reduce_lossless: R is not zero (|R| = " << nr
       << "); use the dissipative reduction";
    throw NotLossless(os.str());
  }

  Mat x = krylov_block(sys, interp, ResolventKind::full_dynamics);
  VwPair vw = assemble_vw(sys, x);
  const std::size_t k = vw.v.cols() / 2;

  // The lossless theorem works with the inverse-form pair: Q must satisfy
  // Q^H K_2n Q = K_2k. Targeting K_2k = -Jcan makes the reduced
  // interconnection exactly the canonical Poisson matrix.
  symp::FormMatrix j_big(sys.j());
  symp::FormMatrix k_big =
      symp::FormMatrix::with_inverse(j_big.inverse(), j_big.m());
  symp::FormMatrix j_can = symp::canonical_j(k);
  symp::FormMatrix k_small =
      symp::FormMatrix::with_inverse(-j_can.m(), j_can.m());
  symp::SymplecticMap map = make_symplectic_basis(vw.v, k_big, k_small);

  Mat left = symplectic_inverse(map);  // J_2k Q^H K_2n
  Mat h_hat = adj_mul(map.q(), matmul(sys.h(), map.q()));
  Mat b_hat = matmul(left, sys.b());
  Mat j_hat = map.form_small().inverse();  // exact canonical Poisson matrix
  Mat r_hat(2 * k, 2 * k);

  ReductionResult res;
  res.method = ReductionMethod::lossless;
  res.reduced_ph = PHSystem(j_hat, r_hat, h_hat, b_hat);
  res.diag.h_min = la::min_eig_hermitian(h_hat);
  res.diag.r_min = 0.0;
  res.diag.skew_residual = 0.0;
  res.diag.basis_residual = map.residual();
  fill_residuals(
      res, interp,
      [&](cd s, const Vec &u) { return transfer_eval(sys, s, u); },
      [&](cd s, const Vec &u) { return transfer_eval(*res.reduced_ph, s, u); });
  return res;
}

ReductionResult reduce_dissipative(const PHSystem &sys,
                                   const InterpolationSet &interp) {
  SymplecticProjector proj = build_projector(sys, interp);

  Mat h_hat = adj_mul(proj.q1, matmul(sys.h(), proj.q1));
  Mat r_hat = adj_mul(proj.q2, matmul(sys.r(), proj.q2));
  Mat b_hat = adj_mul(proj.q2, sys.b());
  Mat j_hat = proj.j_small.m();  // exact canonical Poisson matrix

  ReductionResult res;
  res.method = ReductionMethod::dissipative;
  res.reduced_ph = PHSystem(j_hat, r_hat, h_hat, b_hat);
  res.diag.h_min = la::min_eig_hermitian(h_hat);
  res.diag.r_min = la::min_eig_hermitian(hermitian_part(r_hat));
  double nj = la::norm2_est(j_hat);
  res.diag.skew_residual = la::norm2_est(j_hat + j_hat.adjoint()) / nj;
  res.diag.pencil_rcond = proj.cert.pencil_rcond;
  res.diag.basis_residual = proj.cert.symplectic_residual;
  res.projector = std::move(proj);
  fill_residuals(
      res, interp,
      [&](cd s, const Vec &u) { return transfer_eval(sys, s, u); },
      [&](cd s, const Vec &u) { return transfer_eval(*res.reduced_ph, s, u); });
  return res;
}

Vec reduced_transfer_eval(const ReductionResult &res, cd s, const Vec &u) {
  if (res.reduced_ph) {
    return transfer_eval(*res.reduced_ph, s, u);
  }
  if (res.reduced_ss) {
    return transfer_eval(*res.reduced_ss, s, u);
  }
  throw InvalidParameter("reduced_transfer_eval: empty reduction result");
}

Mat reduced_transfer_matrix(const ReductionResult &res, cd s) {
  if (res.reduced_ph) {
    return transfer_matrix(*res.reduced_ph, s);
  }
  if (res.reduced_ss) {
    return transfer_matrix(*res.reduced_ss, s);
  }
  throw InvalidParameter("reduced_transfer_matrix: empty reduction result");
}

}  // namespace phmor
