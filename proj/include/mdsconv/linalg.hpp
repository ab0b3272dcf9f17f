#pragma once

// Dense exact linear algebra over any FieldLike. Matrices hold integer
// encodings; the field is passed to every operation that does arithmetic.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mdsconv/galois.hpp"

namespace mdsconv {

using Vec = std::vector<Elem>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    /// Throws InvalidParams on ragged input.
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols_if_empty = 0);
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
    Vec col_vec(std::size_t c) const;
    std::vector<Vec> to_rows() const;

    bool is_zero() const noexcept;
    bool row_is_zero(std::size_t r) const noexcept;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vec data_;
};

Matrix transpose(const Matrix& m);
/// Rows of a on top of rows of b; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& idx);
Matrix select_cols(const Matrix& m, const std::vector<std::size_t>& idx);
/// Drops all-zero rows, keeping order.
Matrix drop_zero_rows(const Matrix& m);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; pivot = first nonzero entry in column order.
template <FieldLike F>
RrefResult rref(const F& f, Matrix m) {
    RrefResult out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(piv, k));
        const Elem inv = f.inv(m(r, c));
        for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = f.mul(m(r, k), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Elem factor = m(i, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = f.sub(m(i, k), f.mul(factor, m(r, k)));
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

template <FieldLike F>
std::size_t rank(const F& f, const Matrix& m) {
    return rref(f, m).rank;
}

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that
/// column.
template <FieldLike F>
std::vector<Vec> nullspace(const F& f, const Matrix& m) {
    const auto rr = rref(f, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = f.neg(rr.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

template <FieldLike F>
Matrix multiply(const F& f, const Matrix& a, const Matrix& b) {
    require(a.cols() == b.rows(), ErrorCode::InvalidParams, "matrix product dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
        }
    return out;
}

template <FieldLike F>
Vec mat_vec(const F& f, const Matrix& m, const Vec& v) {
    require(v.size() == m.cols(), ErrorCode::InvalidParams, "vector length mismatch");
    Vec out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Elem acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (v[j] != 0) acc = f.add(acc, f.mul(m(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

inline void check_subset(const Matrix& m, const std::vector<std::size_t>& subset) {
    std::vector<bool> seen(m.cols(), false);
    for (auto c : subset) {
        require(c < m.cols(), ErrorCode::IndexOutOfRange, "column index " + std::to_string(c) + " out of range");
        require(!seen[c], ErrorCode::IndexOutOfRange, "repeated column index " + std::to_string(c));
        seen[c] = true;
    }
}

template <FieldLike F>
bool columns_independent(const F& f, const Matrix& m, const std::vector<std::size_t>& subset) {
    check_subset(m, subset);
    if (subset.size() > m.rows()) return false;
    return rank(f, select_cols(m, subset)) == subset.size();
}

/// Half-open column range [first, last).
using ColRange = std::pair<std::size_t, std::size_t>;

/// A kernel vector of m supported inside `support` (nonzero on `nonzero`
/// when given), expanded to full length; nullopt when none exists.
template <FieldLike F>
std::optional<Vec> solve_on_support(const F& f, const Matrix& m, const std::vector<std::size_t>& support,
                                    std::optional<ColRange> nonzero = std::nullopt) {
    check_subset(m, support);
    if (support.empty()) return std::nullopt;
    const auto basis = nullspace(f, select_cols(m, support));
    for (const auto& b : basis) {
        Vec v(m.cols(), 0);
        bool hit = !nonzero.has_value();
        for (std::size_t i = 0; i < support.size(); ++i) {
            v[support[i]] = b[i];
            if (nonzero && b[i] != 0 && support[i] >= nonzero->first && support[i] < nonzero->second) hit = true;
        }
        if (hit) return v;
    }
    return std::nullopt;
}

inline std::size_t weight(const Vec& v) {
    std::size_t w = 0;
    for (Elem x : v) w += (x != 0);
    return w;
}

/// Forward-eliminated stack of column vectors supporting push/pop, used to
/// test prefix independence during support enumeration. Each stored vector
/// is zero at the pivots of all earlier entries.
template <FieldLike F>
class EchelonStack {
public:
    EchelonStack(const F& f, std::size_t dim) : f_(f), dim_(dim) {}

    std::size_t size() const noexcept { return entries_.size(); }

    /// Reduces x against the stack. Returns true and pushes if independent;
    /// otherwise leaves the stack unchanged and fills `relation` with
    /// coefficients c (one per stacked entry) such that x = sum c_i col_i.
    bool push(std::span<const Elem> x, Vec* relation = nullptr) {
        Vec work(x.begin(), x.end());
        Vec lambda(entries_.size(), 0);
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& e = entries_[i];
            const Elem c = work[e.pivot];
            if (c == 0) continue;
            const Elem s = f_.mul(c, e.pivot_inv);
            lambda[i] = s;
            for (std::size_t r = e.pivot; r < dim_; ++r)
                if (e.vec[r] != 0) work[r] = f_.sub(work[r], f_.mul(s, e.vec[r]));
        }
        std::size_t pivot = 0;
        while (pivot < dim_ && work[pivot] == 0) ++pivot;
        if (pivot == dim_) {
            if (relation) {
                // x = sum_i lambda_i r_i with r_i = sum_j combo_i[j] col_j.
                relation->assign(entries_.size(), 0);
                for (std::size_t i = 0; i < entries_.size(); ++i) {
                    if (lambda[i] == 0) continue;
                    for (std::size_t j = 0; j <= i; ++j)
                        (*relation)[j] = f_.add((*relation)[j], f_.mul(lambda[i], entries_[i].combo[j]));
                }
            }
            return false;
        }
        Entry e;
        e.vec = std::move(work);
        e.pivot = pivot;
        e.pivot_inv = f_.inv(e.vec[pivot]);
        e.combo.assign(entries_.size() + 1, 0);
        e.combo[entries_.size()] = 1;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (lambda[i] == 0) continue;
            for (std::size_t j = 0; j <= i; ++j)
                e.combo[j] = f_.sub(e.combo[j], f_.mul(lambda[i], entries_[i].combo[j]));
        }
        entries_.push_back(std::move(e));
        return true;
    }

    /// True iff x lies in the span (no push).
    bool in_span(std::span<const Elem> x) const {
        Vec work(x.begin(), x.end());
        for (const auto& e : entries_) {
            const Elem c = work[e.pivot];
            if (c == 0) continue;
            const Elem s = f_.mul(c, e.pivot_inv);
            for (std::size_t r = e.pivot; r < dim_; ++r)
                if (e.vec[r] != 0) work[r] = f_.sub(work[r], f_.mul(s, e.vec[r]));
        }
        for (Elem w : work)
            if (w != 0) return false;
        return true;
    }

    void pop() { entries_.pop_back(); }

private:
    struct Entry {
        Vec vec;
        std::size_t pivot = 0;
        Elem pivot_inv = 1;
        Vec combo;  // vec = sum_j combo[j] * col_j
    };
    const F& f_;
    std::size_t dim_;
    std::vector<Entry> entries_;
};

}  // namespace mdsconv
