// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace phmor {

/// Configuration, parsing and usage failures (CLI exit code 1).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : ConfigError {
  using ConfigError::ConfigError;
};

/// Numerical construction failures (CLI exit code 3).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidSystem : NumericalError {
  using NumericalError::NumericalError;
};

struct SingularResolvent : NumericalError {
  using NumericalError::NumericalError;
};

struct SingularStepMatrix : NumericalError {
  using NumericalError::NumericalError;
};

struct SingularPencil : NumericalError {
  using NumericalError::NumericalError;
};

struct NotSymplectic : NumericalError {
  double residual;
  explicit NotSymplectic(const std::string &msg, double res)
      : NumericalError(msg), residual(res) {}
};

struct NotLeftInverse : NumericalError {
  double residual;
  explicit NotLeftInverse(const std::string &msg, double res)
      : NumericalError(msg), residual(res) {}
};

struct WrongInertia : NumericalError {
  std::size_t n_plus, n_minus, n_zero;
  WrongInertia(const std::string &msg, std::size_t np, std::size_t nm,
               std::size_t nz)
      : NumericalError(msg), n_plus(np), n_minus(nm), n_zero(nz) {}
};

struct OddDimension : NumericalError {
  using NumericalError::NumericalError;
};

struct RankDeficient : NumericalError {
  std::size_t column;
  RankDeficient(const std::string &msg, std::size_t col)
      : NumericalError(msg), column(col) {}
};

struct IllConditioned : NumericalError {
  using NumericalError::NumericalError;
};

struct NotLossless : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace phmor
