#include "lrc/matrix.hpp"

#include <stdexcept>

namespace lrc {

Matrix Matrix::identity(FieldPtr f, size_t n) {
    Matrix m(std::move(f), n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::mul(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix dimension mismatch");
    const Field& f = *f_;
    Matrix out(f_, rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t l = 0; l < cols_; ++l) {
            uint64_t v = at(i, l);
            if (!v) continue;
            for (size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(v, other.at(l, j)));
        }
    return out;
}

std::vector<uint64_t> Matrix::row_vector_mul(const std::vector<uint64_t>& v) const {
    if (v.size() != rows_) throw std::invalid_argument("vector length mismatch");
    const Field& f = *f_;
    std::vector<uint64_t> out(cols_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        if (!v[i]) continue;
        for (size_t j = 0; j < cols_; ++j)
            out[j] = f.add(out[j], f.mul(v[i], at(i, j)));
    }
    return out;
}

Matrix Matrix::select_columns(const std::vector<int>& cols) const {
    Matrix out(f_, rows_, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] < 0 || size_t(cols[j]) >= cols_) throw std::out_of_range("column index");
        for (size_t i = 0; i < rows_; ++i) out.at(i, j) = at(i, cols[j]);
    }
    return out;
}

std::vector<uint64_t> Matrix::column(size_t j) const {
    std::vector<uint64_t> c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

namespace {

// in-place row echelon over the field; returns rank
size_t echelon(const Field& f, std::vector<uint64_t>& a, size_t rows, size_t cols) {
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        uint64_t inv = f.inv(a[r * cols + c]);
        for (size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint64_t v = a[i * cols + c];
            if (!v) continue;
            for (size_t j = c; j < cols; ++j)
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(v, a[r * cols + j]));
        }
        ++r;
    }
    return r;
}

}  // namespace

size_t Matrix::rank() const {
    std::vector<uint64_t> work = a_;
    return echelon(*f_, work, rows_, cols_);
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    const size_t n = rows_;
    std::vector<uint64_t> work(n * 2 * n, 0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) work[i * 2 * n + j] = at(i, j);
        work[i * 2 * n + n + i] = 1;
    }
    if (echelon(*f_, work, n, 2 * n) != n) return std::nullopt;
    // echelon normalizes pivots, so the left half is the identity
    Matrix out(f_, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.at(i, j) = work[i * 2 * n + n + j];
    return out;
}

size_t rank_of_columns(const Matrix& g, const std::vector<int>& cols) {
    const size_t rows = g.rows();
    std::vector<uint64_t> work(rows * cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < rows; ++i) work[i * cols.size() + j] = g.at(i, cols[j]);
    return echelon(*g.field(), work, rows, cols.size());
}

LinearSolve solve_left(const Matrix& a, const std::vector<uint64_t>& b) {
    if (b.size() != a.cols()) throw std::invalid_argument("rhs length mismatch");
    const Field& f = *a.field();
    const size_t n = a.rows();       // unknowns
    const size_t eqs = a.cols();     // one equation per column
    std::vector<uint64_t> work(eqs * (n + 1));
    for (size_t e = 0; e < eqs; ++e) {
        for (size_t i = 0; i < n; ++i) work[e * (n + 1) + i] = a.at(i, e);
        work[e * (n + 1) + n] = b[e];
    }
    echelon(f, work, eqs, n + 1);
    LinearSolve out;
    out.solution.assign(n, 0);
    bool consistent = true;
    size_t rank = 0;
    for (size_t e = 0; e < eqs; ++e) {
        size_t lead = n + 1;
        for (size_t j = 0; j <= n; ++j)
            if (work[e * (n + 1) + j]) { lead = j; break; }
        if (lead == n) consistent = false;  // 0 = nonzero
        if (lead < n) {
            ++rank;
            out.solution[lead] = work[e * (n + 1) + n];
        }
    }
    out.rank = rank;
    out.consistent = consistent;
    out.ok = consistent && rank == n;
    return out;
}

}  // namespace lrc
