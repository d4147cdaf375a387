// Copyright (c) 2026 The lrc-toolkit authors.
// SPDX-License-Identifier: Apache-2.0

#include "matgf.hpp"

namespace lrc::matgf {

RankResult rank_with_basis(const gf::Field& F, const Matrix& M) {
    RankResult res;
    // pivot rows kept normalized (leading 1), with their pivot columns
    std::vector<std::vector<gf::elem>> pivots;
    std::vector<std::size_t> pivot_cols;
    std::vector<gf::elem> work(M.cols);
    for (std::size_t r = 0; r < M.rows; ++r) {
        const gf::elem* src = M.row(r);
        std::copy(src, src + M.cols, work.begin());
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            gf::elem c = work[pivot_cols[k]];
            if (c == 0) continue;
            const auto& pv = pivots[k];
            for (std::size_t j = 0; j < M.cols; ++j)
                if (pv[j] != 0) work[j] = F.sub(work[j], F.mul(c, pv[j]));
        }
        std::size_t lead = M.cols;
        for (std::size_t j = 0; j < M.cols; ++j)
            if (work[j] != 0) { lead = j; break; }
        if (lead == M.cols) continue;
        gf::elem linv = F.inv(work[lead]);
        for (std::size_t j = 0; j < M.cols; ++j) work[j] = F.mul(work[j], linv);
        pivots.push_back(work);
        pivot_cols.push_back(lead);
        res.independent_rows.push_back(r);
    }
    res.rank = res.independent_rows.size();
    return res;
}

std::size_t rank(const gf::Field& F, const Matrix& M) { return rank_with_basis(F, M).rank; }

std::optional<std::vector<gf::elem>> solve(const gf::Field& F, const Matrix& A,
                                           const std::vector<gf::elem>& b) {
    const std::size_t n = A.rows, m = A.cols;
    Matrix aug(n, m + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, m) = b[i];
    }
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t sel = n;
        for (std::size_t i = row; i < n; ++i)
            if (aug.at(i, col) != 0) { sel = i; break; }
        if (sel == n) continue;
        if (sel != row)
            for (std::size_t j = col; j <= m; ++j) std::swap(aug.at(sel, j), aug.at(row, j));
        gf::elem pinv = F.inv(aug.at(row, col));
        for (std::size_t j = col; j <= m; ++j) aug.at(row, j) = F.mul(aug.at(row, j), pinv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row) continue;
            gf::elem c = aug.at(i, col);
            if (c == 0) continue;
            for (std::size_t j = col; j <= m; ++j)
                aug.at(i, j) = F.sub(aug.at(i, j), F.mul(c, aug.at(row, j)));
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (aug.at(i, m) != 0) return std::nullopt;  // inconsistent
    std::vector<gf::elem> x(m, 0);
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) x[pivot_col_of_row[i]] = aug.at(i, m);
    return x;
}

}  // namespace lrc::matgf
