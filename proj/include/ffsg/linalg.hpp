#pragma once

#include <optional>
#include <vector>

#include "ffsg/ringelem.hpp"

namespace ffsg {

// Dense matrix over the exact coefficient field.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<RingElem> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
    RingElem& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const RingElem& at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

// Gaussian elimination, exact. Returns rank; optionally records pivot columns.
int rank(Matrix m, std::vector<int>* pivot_cols = nullptr);

// Solve A x = b exactly; nullopt if inconsistent. If underdetermined, free
// variables are set to zero.
std::optional<std::vector<RingElem>> solve(Matrix A, std::vector<RingElem> b);

// Basis of the right kernel.
std::vector<std::vector<RingElem>> kernel_basis(Matrix A);

}  // namespace ffsg
