#pragma once

#include "ellbc/numeric.hpp"

#include <vector>

namespace ellbc {

// Dense row-major complex matrix.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Complex> data_;
};

struct SolveResult {
    std::vector<Complex> x;
    Real condition;  // infinity-norm estimate ||A|| ||A^{-1}||
};

// Gaussian elimination with partial pivoting on a square system. Throws
// SingularError when a pivot vanishes exactly.
SolveResult lu_solve(CMatrix a, std::vector<Complex> b, bool want_condition = true);

Real inf_norm(const CMatrix& a);

}  // namespace ellbc
