#pragma once

// Dense matrices over an exact field and the elimination routines built on
// them. Elimination is Gauss-Jordan with the first nonzero entry of each
// column as pivot, so kernels and spans come out in a reproducible basis.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schurforge/error.hpp"
#include "schurforge/exactfield.hpp"

namespace schurforge {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) fail("DimensionMismatch", "matrix data has wrong length");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Row-major entries.
    const std::vector<T>& data() const { return data_; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x.is_zero(); });
    }

    template <class Fn>
    auto map(Fn&& fn) const {
        using U = decltype(fn(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(fn(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    Matrix transpose() const {
        if (data_.empty()) return Matrix(cols_, rows_, std::vector<T>{});
        Matrix out(cols_, rows_, data_.front());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    Matrix operator-() const {
        Matrix out = *this;
        for (auto& x : out.data_) x = -x;
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            fail("DimensionMismatch", "cannot multiply " + a.shape() + " by " + b.shape());
        if (a.data_.empty() || b.data_.empty()) fail("DimensionMismatch", "empty matrix product");
        const T zero = a.data_.front() - a.data_.front();
        Matrix out(a.rows_, b.cols_, zero);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& lhs = a(i, k);
                if (lhs.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += lhs * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            fail("DimensionMismatch", "shape " + shape() + " vs " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <ExactField F>
using MatrixOver = Matrix<typename F::value_type>;

template <ExactField F>
using VectorOver = std::vector<typename F::value_type>;

template <ExactField F>
MatrixOver<F> zero_matrix(const F& field, std::size_t rows, std::size_t cols) {
    return MatrixOver<F>(rows, cols, field.zero());
}

template <ExactField F>
MatrixOver<F> identity_matrix(const F& field, std::size_t n) {
    auto m = zero_matrix(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

/// Matrix unit E_{rc}.
template <ExactField F>
MatrixOver<F> unit_matrix(const F& field, std::size_t n, std::size_t r, std::size_t c) {
    auto m = zero_matrix(field, n, n);
    m(r, c) = field.one();
    return m;
}

/// Reshape a row-major coordinate vector into an n x n matrix.
template <ExactField F>
MatrixOver<F> square_from_vector(const F&, std::size_t n, const VectorOver<F>& v) {
    return MatrixOver<F>(n, n, v);
}

template <ExactField F>
struct RowEchelon {
    MatrixOver<F> reduced;
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form.
template <ExactField F>
RowEchelon<F> row_reduce(const F& field, MatrixOver<F> m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        const auto inv = field.one() / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const auto factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const F& field, const MatrixOver<F>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return row_reduce(field, m).pivots.size();
}

/// Basis of {x : m x = 0}; one vector per free column, with a 1 in that column.
template <ExactField F>
std::vector<VectorOver<F>> kernel_basis(const F& field, const MatrixOver<F>& m) {
    std::vector<VectorOver<F>> basis;
    const std::size_t n = m.cols();
    if (m.rows() == 0) {
        for (std::size_t j = 0; j < n; ++j) {
            VectorOver<F> v(n, field.zero());
            v[j] = field.one();
            basis.push_back(std::move(v));
        }
        return basis;
    }
    const auto echelon = row_reduce(field, m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : echelon.pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        VectorOver<F> v(n, field.zero());
        v[free] = field.one();
        for (std::size_t r = 0; r < echelon.pivots.size(); ++r) v[echelon.pivots[r]] = -echelon.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <ExactField F>
std::optional<MatrixOver<F>> inverse(const F& field, const MatrixOver<F>& m) {
    if (!m.is_square()) fail("DimensionMismatch", "inverse of non-square matrix " + m.shape());
    const std::size_t n = m.rows();
    auto aug = zero_matrix(field, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = field.one();
    }
    const auto echelon = row_reduce(field, aug);
    if (echelon.pivots.size() < n || echelon.pivots[n - 1] != n - 1) return std::nullopt;
    auto out = zero_matrix(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = echelon.reduced(r, n + c);
    return out;
}

template <ExactField F>
bool is_invertible(const F& field, const MatrixOver<F>& m) {
    return m.is_square() && rank(field, m) == m.rows();
}

/// Determinant by elimination.
template <ExactField F>
typename F::value_type determinant(const F& field, MatrixOver<F> m) {
    if (!m.is_square()) fail("DimensionMismatch", "determinant of non-square matrix " + m.shape());
    auto det = field.one();
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return field.zero();
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        const auto inv = field.one() / m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const auto factor = m(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
        }
    }
    return det;
}

/// Matrix whose columns are the given vectors.
template <ExactField F>
MatrixOver<F> columns_matrix(const F& field, std::size_t length, const std::vector<VectorOver<F>>& columns) {
    auto m = zero_matrix(field, length, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != length) fail("DimensionMismatch", "column of wrong length");
        for (std::size_t r = 0; r < length; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

/// Expresses vectors in a fixed linearly independent family.
template <ExactField F>
class CoordinateSolver {
public:
    CoordinateSolver(const F& field, std::size_t length, const std::vector<VectorOver<F>>& basis)
        : field_(field), length_(length), dim_(basis.size()) {
        // Reduce [B | I]; the right block is the transform E with E*B in echelon form.
        auto aug = zero_matrix(field, length, dim_ + length);
        for (std::size_t c = 0; c < dim_; ++c) {
            if (basis[c].size() != length) fail("DimensionMismatch", "basis vector of wrong length");
            for (std::size_t r = 0; r < length; ++r) aug(r, c) = basis[c][r];
        }
        for (std::size_t r = 0; r < length; ++r) aug(r, dim_ + r) = field.one();
        auto echelon = row_reduce(field, std::move(aug));
        std::size_t basis_rank = 0;
        while (basis_rank < echelon.pivots.size() && echelon.pivots[basis_rank] < dim_) ++basis_rank;
        if (basis_rank != dim_) fail("DimensionMismatch", "coordinate basis is linearly dependent");
        transform_ = zero_matrix(field, length, length);
        for (std::size_t r = 0; r < length; ++r)
            for (std::size_t c = 0; c < length; ++c) transform_(r, c) = echelon.reduced(r, dim_ + c);
    }

    std::size_t dim() const { return dim_; }

    std::optional<VectorOver<F>> try_solve(const VectorOver<F>& v) const {
        if (v.size() != length_) fail("DimensionMismatch", "vector of wrong length");
        VectorOver<F> w(length_, field_.zero());
        for (std::size_t r = 0; r < length_; ++r)
            for (std::size_t c = 0; c < length_; ++c)
                if (!transform_(r, c).is_zero()) w[r] += transform_(r, c) * v[c];
        for (std::size_t r = dim_; r < length_; ++r)
            if (!w[r].is_zero()) return std::nullopt;
        w.resize(dim_, field_.zero());
        return w;
    }

    /// Throws NotInSpan if v is outside the span.
    VectorOver<F> solve(const VectorOver<F>& v) const {
        auto c = try_solve(v);
        if (!c) fail("NotInSpan", "vector is not in the span of the basis");
        return *c;
    }

private:
    F field_;
    std::size_t length_;
    std::size_t dim_;
    MatrixOver<F> transform_;
};

/// Incrementally grown linearly independent family.
template <ExactField F>
class SpanBuilder {
public:
    SpanBuilder(const F& field, std::size_t length) : field_(field), length_(length) {}

    std::size_t dim() const { return members_.size(); }
    const std::vector<VectorOver<F>>& members() const { return members_; }

    /// Adds v if it is independent of the current members.
    bool add(const VectorOver<F>& v) {
        auto residual = reduce(v);
        const auto lead = std::find_if(residual.begin(), residual.end(), [](const auto& x) { return !x.is_zero(); });
        if (lead == residual.end()) return false;
        const std::size_t col = static_cast<std::size_t>(lead - residual.begin());
        const auto inv = field_.one() / residual[col];
        for (auto& x : residual) x *= inv;
        for (auto& [pivot, row] : echelon_) {
            if (row[col].is_zero()) continue;
            const auto factor = row[col];
            for (std::size_t i = 0; i < length_; ++i) row[i] -= factor * residual[i];
        }
        echelon_.emplace_back(col, std::move(residual));
        members_.push_back(v);
        return true;
    }

    bool contains(const VectorOver<F>& v) const {
        const auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const auto& x) { return x.is_zero(); });
    }

private:
    VectorOver<F> reduce(const VectorOver<F>& v) const {
        if (v.size() != length_) fail("DimensionMismatch", "vector of wrong length");
        VectorOver<F> r = v;
        for (const auto& [pivot, row] : echelon_) {
            if (r[pivot].is_zero()) continue;
            const auto factor = r[pivot];
            for (std::size_t i = 0; i < length_; ++i) r[i] -= factor * row[i];
        }
        return r;
    }

    F field_;
    std::size_t length_;
    std::vector<std::pair<std::size_t, VectorOver<F>>> echelon_;
    std::vector<VectorOver<F>> members_;
};

}  // namespace schurforge
