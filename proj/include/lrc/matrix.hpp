#ifndef LRC_MATRIX_HPP
#define LRC_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

/// Dense matrix over a finite field; entries stored as raw element values.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, size_t rows, size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(FieldPtr f, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    uint64_t& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    uint64_t at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Matrix mul(const Matrix& other) const;
    std::vector<uint64_t> row_vector_mul(const std::vector<uint64_t>& v) const;  // v (1 x rows) * this

    Matrix select_columns(const std::vector<int>& cols) const;
    std::vector<uint64_t> column(size_t j) const;

    size_t rank() const;
    std::optional<Matrix> inverse() const;

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    FieldPtr f_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint64_t> a_;
};

/// Rank of the submatrix of `g` formed by the columns listed in `cols`.
size_t rank_of_columns(const Matrix& g, const std::vector<int>& cols);

struct LinearSolve {
    bool ok = false;          // unique solution
    bool consistent = false;  // at least one solution (free variables set to 0)
    size_t rank = 0;
    std::vector<uint64_t> solution;
};

/// Solve x * A = b for a row vector x (A is rows x cols, b has cols entries).
/// Requires a unique solution: ok iff rank(A) == rows and b is consistent.
LinearSolve solve_left(const Matrix& a, const std::vector<uint64_t>& b);

}  // namespace lrc

#endif
