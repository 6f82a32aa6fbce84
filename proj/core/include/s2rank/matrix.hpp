#pragma once

#include <cstddef>
#include <vector>

#include "s2rank/rational.hpp"

namespace s2rank {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

/// Exact determinant. Denominators are cleared row-wise, then the integer
/// matrix is reduced by fraction-free Bareiss elimination (every interior
/// division is exact), so intermediate values stay single integers instead
/// of ever-growing fractions. Throws NonSquareError.
Rational det_exact(const RationalMatrix& m);

/// Exact rank over Q (Gauss-Jordan with exact arithmetic).
std::size_t rank_exact(const RationalMatrix& m);

/// Reduced row echelon form; pivot_cols receives the pivot column indices.
RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>& pivot_cols);

/// Basis of the right nullspace, one vector per free column, in ascending
/// free-column order. Empty when the matrix has full column rank.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

} // namespace s2rank
