// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#include "phmor/io/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "phmor/errors.hpp"

namespace phmor::io {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string next_data_line(std::istream &is) {
  std::string line;
  while (std::getline(is, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '%') {
      continue;
    }
    return line;
  }
  throw ConfigError("matrix market: unexpected end of file");
}

}  // namespace

Mat read_matrix_market(std::istream &is) {
  std::string header;
  if (!std::getline(is, header) ||
      header.rfind("%%MatrixMarket", 0) != 0) {
    throw ConfigError("matrix market: missing %%MatrixMarket header");
  }
  std::istringstream hs(lower(header.substr(14)));
  std::string object, format, field, symmetry;
  hs >> object >> format >> field >> symmetry;
  if (object != "matrix") {
    throw ConfigError("matrix market: only 'matrix' objects are supported");
  }
  if (format != "array" && format != "coordinate") {
    throw ConfigError("matrix market: unknown format '" + format + "'");
  }
  bool complex_field = field == "complex";
  if (!complex_field && field != "real" && field != "integer") {
    throw ConfigError("matrix market: unsupported field '" + field + "'");
  }
  if (symmetry.empty()) {
    symmetry = "general";
  }
  if (symmetry != "general" && symmetry != "symmetric" &&
      symmetry != "hermitian" && symmetry != "skew-symmetric") {
    throw ConfigError("matrix market: unsupported symmetry '" + symmetry +
                      "'");
  }

  std::istringstream sizes(next_data_line(is));
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(sizes >> rows >> cols)) {
    throw ConfigError("matrix market: malformed size line");
  }
  if (format == "coordinate" && !(sizes >> nnz)) {
    throw ConfigError("matrix market: coordinate size line needs nnz");
  }

  Mat m(rows, cols);
  auto read_value = [&](std::istringstream &ls) {
    double re = 0.0, im = 0.0;
    if (!(ls >> re)) {
      throw ConfigError("matrix market: malformed value");
    }
    if (complex_field && !(ls >> im)) {
      throw ConfigError("matrix market: complex entry missing imaginary part");
    }
    return la::cd(re, im);
  };

  auto mirror = [&](std::size_t i, std::size_t j, la::cd v) {
    m(i, j) = v;
    if (i != j) {
      if (symmetry == "symmetric") {
        m(j, i) = v;
      } else if (symmetry == "hermitian") {
        m(j, i) = std::conj(v);
      } else if (symmetry == "skew-symmetric") {
        m(j, i) = -v;
      }
    }
  };

  if (format == "array") {
    // Column-major dense listing; symmetric variants store the lower
    // triangle only.
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t i0 = symmetry == "general" ? 0 : j;
      for (std::size_t i = i0; i < rows; ++i) {
        std::istringstream ls(next_data_line(is));
        mirror(i, j, read_value(ls));
      }
    }
  } else {
    for (std::size_t t = 0; t < nnz; ++t) {
      std::istringstream ls(next_data_line(is));
      std::size_t i = 0, j = 0;
      if (!(ls >> i >> j) || i == 0 || j == 0 || i > rows || j > cols) {
        throw ConfigError("matrix market: bad coordinate entry");
      }
      mirror(i - 1, j - 1, read_value(ls));
    }
  }
  return m;
}

Mat read_matrix_market(const std::filesystem::path &path) {
  std::ifstream is(path);
  if (!is) {
    throw ConfigError("matrix market: cannot open " + path.string());
  }
  try {
    return read_matrix_market(is);
  } catch (const ConfigError &e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

bool is_real(const Mat &m) {
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m.data()[k].imag() != 0.0) {
      return false;
    }
  }
  return true;
}

void write_matrix_market(std::ostream &os, const Mat &m) {
  const bool real = is_real(m);
  os << "%%MatrixMarket matrix array " << (real ? "real" : "complex")
     << " general\n";
  os << m.rows() << " " << m.cols() << "\n";
  char buf[64];
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const la::cd &v = m(i, j);
      if (real) {
        std::snprintf(buf, sizeof(buf), "%.17g", v.real());
        os << buf << "\n";
      } else {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g", v.real(), v.imag());
        os << buf << "\n";
      }
    }
  }
}

void write_matrix_market(const std::filesystem::path &path, const Mat &m) {
  std::ofstream os(path);
  if (!os) {
    throw ConfigError("matrix market: cannot write " + path.string());
  }
  write_matrix_market(os, m);
}

}  // namespace phmor::io
