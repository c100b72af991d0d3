#pragma once

#include <cstddef>
#include <vector>

#include "aglcp/gf.hpp"

namespace aglcp {

// Dense matrix over a fixed field; row-major. All elimination is exact.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    felem at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    felem& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const felem* row(size_t i) const { return a_.data() + i * cols_; }

    std::vector<felem> row_vec(size_t i) const { return {row(i), row(i) + cols_}; }

    void append_row(const std::vector<felem>& r);

    // in-place reduced row echelon form; returns pivot columns
    std::vector<size_t> rref(const Field& F);
    size_t rank(const Field& F) const;
    // basis of { x : M x^T = 0 }, one row per basis vector
    Matrix nullspace(const Field& F) const;
    static Matrix stack(const Matrix& a, const Matrix& b);
    // drop all-zero rows (useful after rref)
    void drop_zero_rows();

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<felem> a_;
};

}  // namespace aglcp
