// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef LRC_MATGF_HPP
#define LRC_MATGF_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gf.hpp"

namespace lrc::matgf {

// Row-major matrix of element codes.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<gf::elem> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
    gf::elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    gf::elem at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    const gf::elem* row(std::size_t i) const { return a.data() + i * cols; }
    gf::elem* row(std::size_t i) { return a.data() + i * cols; }
};

// Processes rows in order, eliminating each against the pivots found so
// far.  Returns the indices of the greedily-independent rows; rank is
// their count.  The input is not modified.
struct RankResult {
    std::size_t rank = 0;
    std::vector<std::size_t> independent_rows;  // original indices, ascending
};
RankResult rank_with_basis(const gf::Field& F, const Matrix& M);

std::size_t rank(const gf::Field& F, const Matrix& M);

// Solves A * x = b (A is rows x cols, b has length rows).  Returns
// nullopt when inconsistent; free variables are set to zero.
std::optional<std::vector<gf::elem>> solve(const gf::Field& F, const Matrix& A,
                                           const std::vector<gf::elem>& b);

}  // namespace lrc::matgf

#endif
