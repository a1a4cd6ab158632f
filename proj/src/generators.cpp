// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/generators.hpp"

#include <cmath>
#include <random>

#include "phmor/la/svd.hpp"

namespace phmor {

namespace {

// mt19937_64 with an inlined Box-Muller transform: std::normal_distribution
// is implementation-defined, this is reproducible everywhere.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  cd complex_normal() {
    double re = (*this)();
    double im = (*this)();
    return cd(re, im);
  }

 private:
  double uniform() {
    // (0, 1]: keeps log() finite.
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

Mat random_complex(Gaussian &g, std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      m(i, j) = g.complex_normal();
    }
  }
  return m;
}

}  // namespace

PHSystem gen_msd_chain(std::size_t n_masses, const std::vector<double> &masses,
                       const std::vector<double> &springs,
                       const std::vector<double> &dampers,
                       std::vector<std::size_t> forced) {
  if (n_masses == 0) {
    throw InvalidParameter("gen_msd_chain: need at least one mass");
  }
  if (masses.size() != n_masses || springs.size() != n_masses ||
      dampers.size() != n_masses) {
    throw InvalidParameter(
        "gen_msd_chain: masses, springs, dampers must each have n_masses "
        "entries");
  }
  for (std::size_t i = 0; i < n_masses; ++i) {
    if (!(masses[i] > 0.0) || !(springs[i] > 0.0)) {
      throw InvalidParameter(
          "gen_msd_chain: masses and spring constants must be positive");
    }
    if (dampers[i] < 0.0) {
      throw InvalidParameter("gen_msd_chain: dampers must be nonnegative");
    }
  }
  if (forced.empty()) {
    forced.push_back(n_masses - 1);
  }
  for (std::size_t idx : forced) {
    if (idx >= n_masses) {
      throw InvalidParameter("gen_msd_chain: forced mass index out of range");
    }
  }

  const std::size_t dim = 2 * n_masses;
  Mat j(dim, dim);
  for (std::size_t i = 0; i < n_masses; ++i) {
    j(i, n_masses + i) = 1.0;
    j(n_masses + i, i) = -1.0;
  }

  // Stiffness of the anchored chain: potential sum_i k_i (q_i - q_{i-1})^2 / 2
  // with q_0 = 0 gives the tridiagonal SPD block.
  Mat h(dim, dim);
  for (std::size_t i = 0; i < n_masses; ++i) {
    double diag = springs[i];
    if (i + 1 < n_masses) {
      diag += springs[i + 1];
      h(i, i + 1) = -springs[i + 1];
      h(i + 1, i) = -springs[i + 1];
    }
    h(i, i) = diag;
    h(n_masses + i, n_masses + i) = 1.0 / masses[i];
  }

  Mat r(dim, dim);
  for (std::size_t i = 0; i < n_masses; ++i) {
    r(n_masses + i, n_masses + i) = dampers[i];
  }

  Mat b(dim, forced.size());
  for (std::size_t c = 0; c < forced.size(); ++c) {
    b(n_masses + forced[c], c) = 1.0;
  }

  return PHSystem(std::move(j), std::move(r), std::move(h), std::move(b));
}

PHSystem gen_msd_chain(std::size_t n_masses, double mass, double spring,
                       double damper, std::vector<std::size_t> forced) {
  return gen_msd_chain(n_masses, std::vector<double>(n_masses, mass),
                       std::vector<double>(n_masses, spring),
                       std::vector<double>(n_masses, damper),
                       std::move(forced));
}

PHSystem gen_random_ph(std::size_t n, std::size_t p, std::uint64_t seed) {
  if (n == 0 || p == 0) {
    throw InvalidParameter("gen_random_ph: n and p must be at least 1");
  }
  Gaussian g(seed);
  const std::size_t dim = 2 * n;
  const double rank_tol = static_cast<double>(dim) * 2.220446049250313e-16;

  Mat j;
  bool ok = false;
  for (int attempt = 0; attempt < 100; ++attempt) {
    Mat s = random_complex(g, dim, dim);
    j = s - s.adjoint();
    if (la::numerical_rank(j, rank_tol) == dim) {
      ok = true;
      break;
    }
  }
  if (!ok) {
    throw NumericalError(
        "gen_random_ph: could not draw a full-rank skew matrix in 100 "
        "attempts");
  }

  Mat m = random_complex(g, dim, dim);
  Mat r = mul_adj(m, m);

  Mat nn = random_complex(g, dim, dim);
  Mat h = mul_adj(nn, nn);
  double eps_shift = 1e-3 * la::norm2_est(h);
  for (std::size_t i = 0; i < dim; ++i) {
    h(i, i) += eps_shift;
  }

  Mat b = random_complex(g, dim, p);
  return PHSystem(std::move(j), std::move(r), std::move(h), std::move(b));
}

}  // namespace phmor
