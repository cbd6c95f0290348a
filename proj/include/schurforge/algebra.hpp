#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "schurforge/exactfield.hpp"
#include "schurforge/matrix.hpp"
#include "schurforge/ncpoly.hpp"

namespace schurforge {

/// Finite-dimensional associative unital algebra given by a multiplication
/// table b_i * b_j = sum_k c[i][j][k] b_k. Associativity and the unit
/// axioms are verified on every basis triple at construction.
template <ExactField F>
class StructureConstantAlgebra {
public:
    using value_type = typename F::value_type;
    using Element = VectorOver<F>;

    StructureConstantAlgebra(F field, std::vector<std::string> basis_names, std::vector<value_type> constants,
                             Element unit)
        : field_(std::move(field)),
          names_(std::move(basis_names)),
          constants_(std::move(constants)),
          unit_(std::move(unit)) {
        const std::size_t m = names_.size();
        if (m == 0) fail("DimensionMismatch", "algebra of dimension zero");
        if (constants_.size() != m * m * m) fail("DimensionMismatch", "structure constant table has wrong size");
        if (unit_.size() != m) fail("DimensionMismatch", "unit has wrong length");
        for (std::size_t i = 0; i < m; ++i) {
            const auto bi = basis_element(i);
            if (multiply(unit_, bi) != bi || multiply(bi, unit_) != bi)
                fail("NotUnital", "unit does not act trivially on basis element " + names_[i]);
            for (std::size_t j = 0; j < m; ++j) {
                const auto bij = multiply(bi, basis_element(j));
                for (std::size_t k = 0; k < m; ++k) {
                    const auto bk = basis_element(k);
                    if (multiply(bij, bk) != multiply(bi, multiply(basis_element(j), bk)))
                        fail("NotAssociative", "(" + names_[i] + "*" + names_[j] + ")*" + names_[k] + " != " +
                                                   names_[i] + "*(" + names_[j] + "*" + names_[k] + ")");
                }
            }
        }
    }

    const F& field() const { return field_; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const std::vector<value_type>& constants() const { return constants_; }
    const value_type& constant(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[(i * dim() + j) * dim() + k];
    }
    const Element& unit() const { return unit_; }

    Element zero_element() const { return Element(dim(), field_.zero()); }
    Element basis_element(std::size_t i) const {
        auto e = zero_element();
        e.at(i) = field_.one();
        return e;
    }

    Element multiply(const Element& x, const Element& y) const {
        require_element(x);
        require_element(y);
        const std::size_t m = dim();
        auto out = zero_element();
        for (std::size_t i = 0; i < m; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (y[j].is_zero()) continue;
                const auto xy = x[i] * y[j];
                for (std::size_t k = 0; k < m; ++k) {
                    const auto& c = constant(i, j, k);
                    if (!c.is_zero()) out[k] += xy * c;
                }
            }
        }
        return out;
    }

    Element add(const Element& x, const Element& y) const {
        require_element(x);
        require_element(y);
        auto out = x;
        for (std::size_t i = 0; i < dim(); ++i) out[i] += y[i];
        return out;
    }

    Element subtract(const Element& x, const Element& y) const {
        require_element(x);
        require_element(y);
        auto out = x;
        for (std::size_t i = 0; i < dim(); ++i) out[i] -= y[i];
        return out;
    }

    Element scale(const value_type& s, const Element& x) const {
        auto out = x;
        for (auto& v : out) v *= s;
        return out;
    }

    bool is_zero(const Element& x) const {
        return std::all_of(x.begin(), x.end(), [](const auto& v) { return v.is_zero(); });
    }

    /// Same field, table and unit; basis names are labels only.
    friend bool operator==(const StructureConstantAlgebra& a, const StructureConstantAlgebra& b) {
        return a.field_ == b.field_ && a.constants_ == b.constants_ && a.unit_ == b.unit_;
    }

private:
    void require_element(const Element& x) const {
        if (x.size() != dim()) fail("DimensionMismatch", "element has the wrong number of coordinates");
    }

    F field_;
    std::vector<std::string> names_;
    std::vector<value_type> constants_;
    Element unit_;
};

/// Lets polynomials be evaluated inside a structure-constant algebra.
template <ExactField F>
struct AlgebraAmbient {
    using value_type = VectorOver<F>;

    const StructureConstantAlgebra<F>* algebra;

    value_type identity() const { return algebra->unit(); }
    value_type zero() const { return algebra->zero_element(); }
    value_type add(const value_type& x, const value_type& y) const { return algebra->add(x, y); }
    value_type multiply(const value_type& x, const value_type& y) const { return algebra->multiply(x, y); }
    value_type scale(const Rational& c, const value_type& x) const {
        return algebra->scale(algebra->field().from_rational(c), x);
    }
    bool is_zero(const value_type& x) const { return algebra->is_zero(x); }
    bool fits(const value_type& x) const { return x.size() == algebra->dim(); }
};

/// The algebra spanned by linearly independent square matrices that is
/// closed under multiplication and contains the identity.
template <ExactField F>
StructureConstantAlgebra<F> algebra_from_matrix_basis(const F& field, const std::vector<MatrixOver<F>>& basis,
                                                      std::vector<std::string> names = {}) {
    if (basis.empty()) fail("DimensionMismatch", "empty matrix basis");
    const std::size_t n = basis.front().rows();
    const std::size_t m = basis.size();
    std::vector<VectorOver<F>> flat;
    for (const auto& b : basis) {
        if (b.rows() != n || b.cols() != n) fail("DimensionMismatch", "basis matrices must share one square shape");
        flat.push_back(b.data());
    }
    const CoordinateSolver<F> solver(field, n * n, flat);
    std::vector<typename F::value_type> constants;
    constants.reserve(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const auto coords = solver.try_solve((basis[i] * basis[j]).data());
            if (!coords) fail("NotClosed", "matrix span is not closed under multiplication");
            constants.insert(constants.end(), coords->begin(), coords->end());
        }
    const auto unit = solver.try_solve(identity_matrix(field, n).data());
    if (!unit) fail("NotUnital", "matrix span does not contain the identity");
    if (names.empty())
        for (std::size_t i = 0; i < m; ++i) names.push_back("b" + std::to_string(i));
    return StructureConstantAlgebra<F>(field, std::move(names), std::move(constants), *unit);
}

/// Mat_n with basis E_rc in row-major order.
template <ExactField F>
StructureConstantAlgebra<F> matrix_algebra(const F& field, std::size_t n) {
    std::vector<MatrixOver<F>> basis;
    std::vector<std::string> names;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            basis.push_back(unit_matrix(field, n, r, c));
            names.push_back("E" + std::to_string(r) + std::to_string(c));
        }
    return algebra_from_matrix_basis(field, basis, std::move(names));
}

/// Same algebra expressed in a new basis (coordinate vectors in the old one).
template <ExactField F>
StructureConstantAlgebra<F> rebase(const StructureConstantAlgebra<F>& algebra,
                                   const std::vector<VectorOver<F>>& new_basis, std::vector<std::string> names) {
    const std::size_t m = algebra.dim();
    if (new_basis.size() != m) fail("DimensionMismatch", "new basis has the wrong size");
    const CoordinateSolver<F> solver(algebra.field(), m, new_basis);
    std::vector<typename F::value_type> constants;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const auto c = solver.solve(algebra.multiply(new_basis[i], new_basis[j]));
            constants.insert(constants.end(), c.begin(), c.end());
        }
    return StructureConstantAlgebra<F>(algebra.field(), std::move(names), std::move(constants),
                                       solver.solve(algebra.unit()));
}

}  // namespace schurforge
