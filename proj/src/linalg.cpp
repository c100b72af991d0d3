#include "aglcp/linalg.hpp"

#include <algorithm>

namespace aglcp {

void Matrix::append_row(const std::vector<felem>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) fail("ShapeMismatch", "row length does not match matrix width");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

std::vector<size_t> Matrix::rref(const Field& F) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t sel = rows_;
        for (size_t i = r; i < rows_; ++i)
            if (at(i, c) != 0) {
                sel = i;
                break;
            }
        if (sel == rows_) continue;
        if (sel != r)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(sel, j));
        felem il = F.inv(at(r, c));
        for (size_t j = c; j < cols_; ++j) at(r, j) = F.mul(at(r, j), il);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            felem f = at(i, c);
            if (!f) continue;
            for (size_t j = c; j < cols_; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t Matrix::rank(const Field& F) const {
    Matrix tmp = *this;
    return tmp.rref(F).size();
}

Matrix Matrix::nullspace(const Field& F) const {
    Matrix tmp = *this;
    auto pivots = tmp.rref(F);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;

    Matrix ns(0, cols_);
    for (size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<felem> v(cols_, 0);
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(tmp.at(i, c));
        ns.append_row(v);
    }
    return ns;
}

Matrix Matrix::stack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_ && a.rows_ != 0 && b.rows_ != 0)
        fail("ShapeMismatch", "stacking matrices of different widths");
    Matrix r(0, a.rows_ ? a.cols_ : b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) r.append_row(a.row_vec(i));
    for (size_t i = 0; i < b.rows_; ++i) r.append_row(b.row_vec(i));
    return r;
}

void Matrix::drop_zero_rows() {
    size_t w = 0;
    for (size_t i = 0; i < rows_; ++i) {
        bool zero = true;
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j)) {
                zero = false;
                break;
            }
        if (!zero) {
            if (w != i)
                for (size_t j = 0; j < cols_; ++j) at(w, j) = at(i, j);
            ++w;
        }
    }
    rows_ = w;
    a_.resize(rows_ * cols_);
}

}  // namespace aglcp
