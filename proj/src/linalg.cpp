#include "ffsg/linalg.hpp"

namespace ffsg {

namespace {

size_t complexity(const RingElem& e) { return e.complexity(); }

// forward elimination to row echelon form; returns pivot (row, col) list
std::vector<std::pair<int, int>> echelon(Matrix& m) {
    std::vector<std::pair<int, int>> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int best = -1;
        size_t bestcx = 0;
        for (int i = r; i < m.rows; ++i) {
            if (!m.at(i, c).is_zero()) {
                size_t cx = complexity(m.at(i, c));
                if (best < 0 || cx < bestcx) {
                    best = i;
                    bestcx = cx;
                }
            }
        }
        if (best < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.a[(size_t)r * m.cols + j], m.a[(size_t)best * m.cols + j]);
        RingElem inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols; ++j)
            if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            RingElem f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) {
                if (m.at(r, j).is_zero()) continue;
                m.at(i, j) -= f * m.at(r, j);
            }
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(Matrix m, std::vector<int>* pivot_cols) {
    auto pivots = echelon(m);
    if (pivot_cols) {
        pivot_cols->clear();
        for (auto& [r, c] : pivots) pivot_cols->push_back(c);
    }
    return (int)pivots.size();
}

std::optional<std::vector<RingElem>> solve(Matrix A, std::vector<RingElem> b) {
    int n = A.cols;
    Matrix aug(A.rows, n + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = std::move(A.at(i, j));
        aug.at(i, n) = std::move(b[(size_t)i]);
    }
    auto pivots = echelon(aug);
    std::vector<RingElem> x(n, RingElem(0));
    for (auto& [r, c] : pivots) {
        if (c == n) return std::nullopt;  // pivot in the rhs column: inconsistent
        x[c] = aug.at(r, n);
    }
    return x;
}

std::vector<std::vector<RingElem>> kernel_basis(Matrix A) {
    int n = A.cols;
    auto pivots = echelon(A);
    std::vector<int> pivot_of_col(n, -1);
    for (auto& [r, c] : pivots) pivot_of_col[c] = r;
    std::vector<std::vector<RingElem>> basis;
    for (int c = 0; c < n; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<RingElem> v(n, RingElem(0));
        v[c] = RingElem(1);
        for (int c2 = 0; c2 < n; ++c2) {
            int r = pivot_of_col[c2];
            if (r >= 0) v[c2] = -A.at(r, c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ffsg
