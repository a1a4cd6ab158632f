// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/interpolation.hpp"

#include <cmath>
#include <sstream>

#include "phmor/la/eigh.hpp"
#include "phmor/la/lu.hpp"
#include "phmor/la/qr.hpp"
#include "phmor/parallel.hpp"

namespace phmor {

using la::Eigh;
using la::Lu;

InterpolationSet::InterpolationSet(std::vector<cd> pts, std::vector<Vec> dirs)
    : points(std::move(pts)), directions(std::move(dirs)) {
  if (points.empty()) {
    throw InvalidParameter("InterpolationSet: at least one point required");
  }
  if (points.size() != directions.size()) {
    throw InvalidParameter(
        "InterpolationSet: points and directions differ in length");
  }
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (points[a] == points[b]) {
        throw InvalidParameter(
            "InterpolationSet: interpolation points must be pairwise "
            "distinct");
      }
    }
  }
  for (const Vec &u : directions) {
    if (vec_norm(u) == 0.0) {
      throw InvalidParameter(
          "InterpolationSet: tangent directions must be nonzero");
    }
  }
}

InterpolationSet InterpolationSet::canonical(std::vector<cd> pts,
                                             std::size_t p) {
  std::vector<Vec> dirs;
  dirs.reserve(pts.size());
  for (std::size_t m = 0; m < pts.size(); ++m) {
    Vec u(p, cd(0.0));
    u[m % p] = 1.0;
    dirs.push_back(std::move(u));
  }
  return InterpolationSet(std::move(pts), std::move(dirs));
}

Mat krylov_block(const PHSystem &sys, const InterpolationSet &interp,
                 ResolventKind kind) {
  const std::size_t dim = sys.dim();
  const std::size_t m_pts = interp.size();
  Mat a_eff = kind == ResolventKind::full_dynamics
                  ? matmul(sys.j() - sys.r(), sys.h())
                  : matmul(sys.j(), sys.h());
  Mat x(dim, m_pts);
  // Columns are independent resolvent solves.
  parallel_for(m_pts, [&](std::size_t m) {
    la::require(interp.directions[m].size() == sys.inputs(),
                "krylov_block: direction dimension mismatch");
    Mat shifted = Mat::identity(dim);
    shifted *= interp.points[m];
    shifted -= a_eff;
    Lu lu = la::lu_factor(shifted);
    if (lu.singular || lu.rcond < kTauSing) {
      std::ostringstream os;
      os << "krylov_block: point " << m << " (s = " << interp.points[m].real()
         << (interp.points[m].imag() < 0 ? " - " : " + ")
         << std::abs(interp.points[m].imag())
         << "i) is numerically an eigenvalue of the pencil (rcond = "
         << lu.rcond << ")";
      throw SingularResolvent(os.str());
    }
    Vec col = lu.solve(matvec(sys.b(), interp.directions[m]));
    x.set_col(m, col);
  });
  return x;
}

VwPair assemble_vw(const PHSystem &sys, const Mat &x) {
  const std::size_t p = sys.inputs();
  const std::size_t m_pts = x.cols();
  la::require(x.rows() == sys.dim(), "assemble_vw: X row mismatch");
  if ((p + m_pts) % 2 != 0) {
    std::ostringstream os;
    os << "assemble_vw: p + M = " << p + m_pts
       << " must be even to form a 2k-dimensional reduced space; add or "
          "remove one interpolation point";
    throw OddDimension(os.str());
  }
  Mat v(sys.dim(), p + m_pts);
  v.set_block(0, 0, sys.b());
  v.set_block(0, p, x);

  la::Qr qr = la::qr_factor(v);
  double rank_tol = static_cast<double>(sys.dim()) * 2.220446049250313e-16;
  std::size_t rank = qr.rank(rank_tol);
  if (rank < v.cols()) {
    // First pivoted column with a collapsed diagonal identifies the
    // dependent direction in the original ordering.
    std::size_t bad = qr.jpvt[rank];
    std::ostringstream os;
    os << "assemble_vw: [B X] is rank deficient (rank " << rank << " of "
       << v.cols() << "); column " << bad
       << (bad < p ? " (input map)" : " (interpolation point)")
       << " is linearly dependent on the others";
    throw RankDeficient(os.str(), bad);
  }
  Mat w = matmul(sys.h(), v);
  return {std::move(v), std::move(w)};
}

InertiaTriple inertia(const Mat &s, double tol) {
  la::require(s.square(), "inertia: square matrix required");
  const double herm_tol = struct_tol(s.rows());
  const double ns = la::norm2_est(s);
  if (ns > 0.0 && la::norm2_est(s - s.adjoint()) > herm_tol * ns) {
    throw InvalidParameter("inertia: matrix is not Hermitian within tolerance");
  }
  Eigh e = la::eigh(s);
  double scale = 0.0;
  for (double w : e.w) {
    scale = std::max(scale, std::abs(w));
  }
  double gate = tol * scale;
  InertiaTriple t;
  for (double w : e.w) {
    if (w > gate) {
      ++t.n_plus;
    } else if (w < -gate) {
      ++t.n_minus;
    } else {
      ++t.n_zero;
    }
  }
  return t;
}

namespace {

constexpr double kInertiaTol = 1e-12;

void require_split_inertia(const Mat &s, std::size_t k) {
  InertiaTriple t = inertia(s, kInertiaTol);
  if (t.n_plus != k || t.n_minus != k || t.n_zero != 0) {
    std::ostringstream os;
    os << "congruence_to_canonical: inertia (" << t.n_plus << ", "
       << t.n_minus << ", " << t.n_zero << ") differs from the required ("
       << k << ", " << k
       << ", 0); perturb the interpolation points or directions";
    throw WrongInertia(os.str(), t.n_plus, t.n_minus, t.n_zero);
  }
}

}  // namespace

Mat congruence_to_canonical(const Mat &s) {
  la::require(s.square(), "congruence_to_canonical: square matrix required");
  const std::size_t dim = s.rows();
  const std::size_t k = dim / 2;
  if (dim == 0 || dim % 2 != 0) {
    throw WrongInertia("congruence_to_canonical: odd dimension", 0, 0, dim);
  }
  require_split_inertia(s, k);

  Eigh e = la::eigh(s);
  // Descending order puts the k positive eigenvalues first, giving
  // A0^H S A0 = diag(I_k, -I_k).
  Mat a0(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::size_t src = dim - 1 - j;
    double scale = 1.0 / std::sqrt(std::abs(e.w[src]));
    Vec col = e.v.col_vec(src);
    a0.set_col(j, vec_scale(cd(scale), std::move(col)));
  }
  // Fixed unitary with Z diag(I, -I) Z^H = i*Jcan:
  // Z = [[I, I], [-iI, iI]] / sqrt(2), applied as A = A0 Z^H.
  const double rt = 1.0 / std::sqrt(2.0);
  const cd im(0.0, 1.0);
  Mat a(dim, dim);
  const la::Kernels &kr = la::active_kernels();
  for (std::size_t j = 0; j < k; ++j) {
    // col_j = (a0_j + a0_{k+j}) / sqrt(2)
    kr.axpy(dim, cd(rt), a0.col(j), a.col(j));
    kr.axpy(dim, cd(rt), a0.col(k + j), a.col(j));
    // col_{k+j} = i (a0_j - a0_{k+j}) / sqrt(2)
    kr.axpy(dim, im * rt, a0.col(j), a.col(k + j));
    kr.axpy(dim, -im * rt, a0.col(k + j), a.col(k + j));
  }
  return a;
}

namespace {

// Q1 = V A1, Q2 = W A2 with A2 from the congruence on i W^H J W and
// A1 = (A2^H W^H V)^{-1}.
struct ProjectorFactors {
  Mat a1, a2;
  double pencil_rcond;
};

ProjectorFactors projector_factors(const Mat &v, const Mat &w, const Mat &j) {
  const cd im(0.0, 1.0);
  Mat s = im * adj_mul(w, matmul(j, w));
  Mat a2 = congruence_to_canonical(hermitian_part(s));
  Mat pencil = adj_mul(a2, adj_mul(w, v));
  Lu lu = la::lu_factor(pencil);
  if (lu.singular || lu.rcond < kTauSing) {
    std::ostringstream os;
    os << "build_projector: the pencil A2^H W^H V is numerically singular "
          "(rcond = "
       << lu.rcond << "); the interpolation data is too close to degenerate";
    throw IllConditioned(os.str());
  }
  Mat a1 = lu.solve(Mat::identity(pencil.rows()));
  return {std::move(a1), std::move(a2), lu.rcond};
}

}  // namespace

SymplecticProjector build_projector(const PHSystem &sys,
                                    const InterpolationSet &interp) {
  Mat x = krylov_block(sys, interp, ResolventKind::full_dynamics);
  VwPair vw = assemble_vw(sys, x);
  ProjectorFactors f = projector_factors(vw.v, vw.w, sys.j());

  const std::size_t k = vw.v.cols() / 2;
  SymplecticProjector proj{matmul(vw.v, f.a1), matmul(vw.w, f.a2),
                           symp::canonical_j(k)};
  proj.cert.pencil_rcond = f.pencil_rcond;

  symp::FormMatrix j_big(sys.j());
  proj.cert.symplectic_residual =
      symp::is_symplectic(proj.q2, j_big, proj.j_small, symp::kTauSymp)
          .residual;
  proj.cert.left_inverse_residual = la::norm2_est(
      adj_mul(proj.q1, proj.q2) - Mat::identity(proj.q2.cols()));

  // Range certificates: every Krylov column and every input column must lie
  // in ran(Q1), and H times the Krylov columns in ran(Q2). The ranges equal
  // ran(V), ran(W) by construction; the least-squares residuals guard
  // conditioning.
  la::Qr q1_qr = la::qr_factor(proj.q1);
  la::Qr q2_qr = la::qr_factor(proj.q2);
  const std::size_t cols2k = proj.q1.cols();
  double worst = 0.0;
  auto range_check = [&](const la::Qr &qr, const Vec &col) {
    double nrm = vec_norm(col);
    if (nrm > 0.0) {
      worst = std::max(worst, qr.ls_residual(col, cols2k) / nrm);
    }
  };
  for (std::size_t j = 0; j < sys.inputs(); ++j) {
    range_check(q1_qr, sys.b().col_vec(j));
  }
  for (std::size_t m = 0; m < x.cols(); ++m) {
    Vec xm = x.col_vec(m);
    range_check(q1_qr, xm);
    range_check(q2_qr, matvec(sys.h(), xm));
  }
  proj.cert.range_residual_max = worst;
  return proj;
}

symp::SymplecticMap make_symplectic_basis(const Mat &v,
                                          const symp::FormMatrix &form_big) {
  return make_symplectic_basis(v, form_big,
                               symp::canonical_j(v.cols() / 2));
}

symp::SymplecticMap make_symplectic_basis(const Mat &v,
                                          const symp::FormMatrix &form_big,
                                          const symp::FormMatrix &target) {
  la::require(v.rows() == form_big.dim(), "make_symplectic_basis: V rows");
  la::require(v.cols() == target.dim(), "make_symplectic_basis: V cols");
  const cd im(0.0, 1.0);
  Mat s = im * adj_mul(v, matmul(form_big.m(), v));
  Mat a_s = congruence_to_canonical(hermitian_part(s));
  // a_s^H (V^H F V) a_s = Jcan. Compose with the congruence of the target to
  // land on an arbitrary skew form: T = c^{-H} Jcan c^{-1}.
  Mat t_h = hermitian_part(im * target.m());
  Mat c = congruence_to_canonical(t_h);
  Mat a = matmul(a_s, la::inverse(c));
  return symp::SymplecticMap(matmul(v, a), form_big, target);
}

}  // namespace phmor
