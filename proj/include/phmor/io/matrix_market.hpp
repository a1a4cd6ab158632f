// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>

#include "phmor/la/mat.hpp"

namespace phmor::io {

using la::Mat;

/// Matrix Market readers/writers. Reading accepts array and coordinate
/// formats, real/integer/complex fields, and the general/symmetric/
/// hermitian/skew-symmetric qualifiers. Writing emits array format with
/// 17 significant digits, which round-trips IEEE doubles bit-exactly.
Mat read_matrix_market(std::istream &is);
Mat read_matrix_market(const std::filesystem::path &path);

void write_matrix_market(std::ostream &os, const Mat &m);
void write_matrix_market(const std::filesystem::path &path, const Mat &m);

/// True when every entry has zero imaginary part (written as a real matrix).
bool is_real(const Mat &m);

}  // namespace phmor::io
