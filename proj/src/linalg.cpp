#include "mdsconv/linalg.hpp"

namespace mdsconv {

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols_if_empty) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, ErrorCode::InvalidParams, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec Matrix::col_vec(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Vec> Matrix::to_rows() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
    return out;
}

bool Matrix::is_zero() const noexcept {
    for (Elem x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::row_is_zero(std::size_t r) const noexcept {
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) != 0) return false;
    return true;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    return t;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    require(a.cols() == b.cols(), ErrorCode::InvalidParams, "vstack column mismatch");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), ErrorCode::InvalidParams, "hstack row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& idx) {
    Matrix out(idx.size(), m.cols());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        require(idx[i] < m.rows(), ErrorCode::IndexOutOfRange, "row index out of range");
        for (std::size_t c = 0; c < m.cols(); ++c) out(i, c) = m(idx[i], c);
    }
    return out;
}

Matrix select_cols(const Matrix& m, const std::vector<std::size_t>& idx) {
    Matrix out(m.rows(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        require(idx[j] < m.cols(), ErrorCode::IndexOutOfRange, "column index out of range");
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, j) = m(r, idx[j]);
    }
    return out;
}

Matrix drop_zero_rows(const Matrix& m) {
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m.row_is_zero(r)) keep.push_back(r);
    Matrix out = select_rows(m, keep);
    if (keep.empty()) out = Matrix(0, m.cols());
    return out;
}

}  // namespace mdsconv
