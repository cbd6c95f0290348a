#pragma once

// Quiver representations and their dictionary with representations of the
// path algebra in Mat_n, n = sum of the dimension vector.

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "schurforge/algebra.hpp"
#include "schurforge/azumaya.hpp"
#include "schurforge/matrep.hpp"
#include "schurforge/ncpoly.hpp"

namespace schurforge {

using DimVector = std::vector<std::size_t>;

template <ExactField F>
class QuiverRep {
public:
    /// maps[a] is dims[target] x dims[source].
    QuiverRep(Quiver quiver, F field, DimVector dims, std::vector<MatrixOver<F>> maps)
        : quiver_(std::move(quiver)), field_(std::move(field)), dims_(std::move(dims)), maps_(std::move(maps)) {
        if (dims_.size() != quiver_.vertex_count())
            fail("DimensionMismatch", "dimension vector has " + std::to_string(dims_.size()) + " entries for " +
                                          std::to_string(quiver_.vertex_count()) + " vertices");
        if (maps_.size() != quiver_.arrows().size())
            fail("DimensionMismatch", "expected one matrix per arrow");
        for (std::size_t a = 0; a < maps_.size(); ++a) {
            const auto& arrow = quiver_.arrows()[a];
            if (maps_[a].rows() != dims_[arrow.target] || maps_[a].cols() != dims_[arrow.source])
                fail("DimensionMismatch", "map of arrow " + std::to_string(a) + " is " + maps_[a].shape() +
                                              ", expected " + std::to_string(dims_[arrow.target]) + "x" +
                                              std::to_string(dims_[arrow.source]));
        }
    }

    const Quiver& quiver() const { return quiver_; }
    const F& field() const { return field_; }
    const DimVector& dims() const { return dims_; }
    const std::vector<MatrixOver<F>>& maps() const { return maps_; }
    std::size_t total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

    friend bool operator==(const QuiverRep& x, const QuiverRep& y) {
        return x.quiver_ == y.quiver_ && x.field_ == y.field_ && x.dims_ == y.dims_ && x.maps_ == y.maps_;
    }

private:
    Quiver quiver_;
    F field_;
    DimVector dims_;
    std::vector<MatrixOver<F>> maps_;
};

namespace detail {

inline std::vector<std::size_t> offsets(const DimVector& dims) {
    std::vector<std::size_t> out(dims.size(), 0);
    for (std::size_t i = 1; i < dims.size(); ++i) out[i] = out[i - 1] + dims[i - 1];
    return out;
}

}  // namespace detail

/// e_i -> block idempotent of the i-th summand, f_a -> its map in block (target, source).
template <ExactField F>
MatrixRep<F> quiver_to_matrep(const QuiverRep<F>& qr) {
    const std::size_t n = qr.total_dim();
    if (n == 0) fail("ZeroTotalDimension", "dimension vector sums to zero");
    const auto& field = qr.field();
    const auto off = detail::offsets(qr.dims());
    std::vector<MatrixOver<F>> images;
    for (std::size_t i = 0; i < qr.dims().size(); ++i) {
        auto e = zero_matrix(field, n, n);
        for (std::size_t k = 0; k < qr.dims()[i]; ++k) e(off[i] + k, off[i] + k) = field.one();
        images.push_back(std::move(e));
    }
    for (std::size_t a = 0; a < qr.maps().size(); ++a) {
        const auto& arrow = qr.quiver().arrows()[a];
        const auto& map = qr.maps()[a];
        auto f = zero_matrix(field, n, n);
        for (std::size_t r = 0; r < map.rows(); ++r)
            for (std::size_t c = 0; c < map.cols(); ++c) f(off[arrow.target] + r, off[arrow.source] + c) = map(r, c);
        images.push_back(std::move(f));
    }
    return MatrixRep<F>(path_algebra(qr.quiver()), field, n, std::move(images));
}

template <ExactField F>
struct QuiverDecomposition {
    QuiverRep<F> rep;
    /// Columns: adapted basis, vertex by vertex. rho(g) = C * quiver_to_matrep(rep)(g) * C^-1.
    MatrixOver<F> change_of_basis;
};

/// V_i = column space of rho(e_i); arrow matrices are the compressed blocks.
template <ExactField F>
QuiverDecomposition<F> matrep_to_quiver(const Quiver& quiver, const MatrixRep<F>& rho) {
    if (!(rho.presentation() == path_algebra(quiver)))
        fail("NotPathAlgebraRep", "representation is not presented by the path algebra of this quiver");
    const auto& field = rho.field();
    const std::size_t n = rho.degree();
    const std::size_t nv = quiver.vertex_count();

    DimVector dims;
    auto c = zero_matrix(field, n, n);
    std::size_t col = 0;
    for (std::size_t i = 0; i < nv; ++i) {
        const auto& e = rho.image(vertex_generator(quiver, i));
        const auto pivots = row_reduce(field, e).pivots;
        dims.push_back(pivots.size());
        for (auto p : pivots) {
            if (col >= n) fail("NotPathAlgebraRep", "vertex idempotents have total rank above n");
            for (std::size_t r = 0; r < n; ++r) c(r, col) = e(r, p);
            ++col;
        }
    }
    if (col != n) fail("NotPathAlgebraRep", "vertex idempotents do not decompose the identity");
    const auto c_inv = inverse(field, c);
    if (!c_inv) fail("NotPathAlgebraRep", "vertex images are not complementary");

    const auto off = detail::offsets(dims);
    std::vector<MatrixOver<F>> maps;
    for (std::size_t a = 0; a < quiver.arrows().size(); ++a) {
        const auto& arrow = quiver.arrows()[a];
        const auto m = *c_inv * rho.image(arrow_generator(quiver, a)) * c;
        auto block = zero_matrix(field, dims[arrow.target], dims[arrow.source]);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t k = 0; k < n; ++k) {
                const bool inside = r >= off[arrow.target] && r < off[arrow.target] + dims[arrow.target] &&
                                    k >= off[arrow.source] && k < off[arrow.source] + dims[arrow.source];
                if (inside)
                    block(r - off[arrow.target], k - off[arrow.source]) = m(r, k);
                else if (!m(r, k).is_zero())
                    fail("NotPathAlgebraRep", "arrow " + std::to_string(a) + " leaks outside its block");
            }
        maps.push_back(std::move(block));
    }
    return {QuiverRep<F>(quiver, field, std::move(dims), std::move(maps)), std::move(c)};
}

template <ExactField F>
bool is_schur_quiver(const QuiverRep<F>& qr) {
    return is_schur(quiver_to_matrep(qr));
}

/// m_i = dim (rho(e_i) * A) for A = Mat_n.
template <ExactField F>
std::vector<std::size_t> right_ideal_dims(const Quiver& quiver, const MatrixRep<F>& rho) {
    if (!(rho.presentation() == path_algebra(quiver)))
        fail("NotPathAlgebraRep", "representation is not presented by the path algebra of this quiver");
    const auto algebra = matrix_algebra(rho.field(), rho.degree());
    std::vector<VectorOver<F>> idempotents;
    for (std::size_t i = 0; i < quiver.vertex_count(); ++i)
        idempotents.push_back(rho.image(vertex_generator(quiver, i)).data());
    std::vector<std::size_t> dims;
    for (const auto& ideal : idempotent_right_ideals(algebra, std::span(idempotents))) dims.push_back(ideal.dim);
    return dims;
}

/// Same for a path-algebra representation in an arbitrary algebra.
template <ExactField F>
std::vector<std::size_t> right_ideal_dims(const Quiver& quiver, const AzuRep<F>& rho) {
    if (!(rho.presentation() == path_algebra(quiver)))
        fail("NotPathAlgebraRep", "representation is not presented by the path algebra of this quiver");
    std::vector<VectorOver<F>> idempotents;
    for (std::size_t i = 0; i < quiver.vertex_count(); ++i)
        idempotents.push_back(rho.images()[vertex_generator(quiver, i)]);
    std::vector<std::size_t> dims;
    for (const auto& ideal : idempotent_right_ideals(rho.algebra(), std::span(idempotents))) dims.push_back(ideal.dim);
    return dims;
}

}  // namespace schurforge
