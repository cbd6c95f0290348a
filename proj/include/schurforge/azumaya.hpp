#pragma once

// Azumaya algebras over fields: quaternion algebras, representations into
// structure-constant algebras, centralizers and the double-centralizer check.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "schurforge/algebra.hpp"
#include "schurforge/exactfield.hpp"
#include "schurforge/matrep.hpp"
#include "schurforge/matrix.hpp"
#include "schurforge/ncpoly.hpp"

namespace schurforge {

using RationalAlgebra = StructureConstantAlgebra<RationalField>;
using Quaternion = std::array<Rational, 4>;  ///< x0 + x1 i + x2 j + x3 k

/// H(a, b): basis 1, i, j, k with i^2 = a, j^2 = b, ij = k = -ji.
class QuaternionAlgebra {
public:
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const RationalAlgebra& algebra() const { return algebra_; }

    Quaternion multiply(const Quaternion& x, const Quaternion& y) const;
    RationalAlgebra::Element element(const Quaternion& x) const { return {x.begin(), x.end()}; }

    friend QuaternionAlgebra quaternion_algebra(const Rational& a, const Rational& b);

private:
    QuaternionAlgebra(Rational a, Rational b, RationalAlgebra algebra)
        : a_(std::move(a)), b_(std::move(b)), algebra_(std::move(algebra)) {}

    Rational a_;
    Rational b_;
    RationalAlgebra algebra_;
};

/// Throws ZeroParameter if a or b vanishes.
QuaternionAlgebra quaternion_algebra(const Rational& a, const Rational& b);

/// x0^2 - a x1^2 - b x2^2 + ab x3^2.
Rational reduced_norm(const QuaternionAlgebra& h, const Quaternion& x);

Quaternion quaternion_conjugate(const Quaternion& x);

/// Throws Singular when the reduced norm vanishes.
Quaternion quaternion_inverse(const QuaternionAlgebra& h, const Quaternion& x);

/// H(a,b) -> Mat_2(L), L = Q(sqrt a): i -> diag(sqrt a, -sqrt a), j -> [[0,b],[1,0]].
struct SplitEmbedding {
    QuadField field;
    QuadElem sqrt_a;                            ///< sqrt(a) written in L
    std::array<Matrix<QuadElem>, 4> images;     ///< images of 1, i, j, k

    Matrix<QuadElem> apply(const Quaternion& x) const;
};

/// Throws SquareParameter when a is a square in Q; use
/// rational_split_embedding in that case.
SplitEmbedding split_embedding(const QuaternionAlgebra& h, std::uint64_t factor_bound = kDefaultFactorBound);

/// Splitting over Q itself when a = s^2: i -> diag(s, -s), j -> [[0,b],[1,0]].
struct RationalSplitEmbedding {
    Rational sqrt_a;
    std::array<Matrix<Rational>, 4> images;

    Matrix<Rational> apply(const Quaternion& x) const;
};

/// Throws NonSquareParameter when a is not a square in Q.
RationalSplitEmbedding rational_split_embedding(const QuaternionAlgebra& h,
                                                std::uint64_t factor_bound = kDefaultFactorBound);

// ---------------------------------------------------------------------------

/// Representation of a presented algebra inside a structure-constant algebra.
template <ExactField F>
class AzuRep {
public:
    using Element = VectorOver<F>;

    AzuRep(FreePresentation presentation, StructureConstantAlgebra<F> algebra, std::vector<Element> images)
        : presentation_(std::move(presentation)), algebra_(std::move(algebra)), images_(std::move(images)) {
        if (images_.size() != presentation_.generator_count())
            fail("DimensionMismatch", "expected " + std::to_string(presentation_.generator_count()) +
                                          " generator images, got " + std::to_string(images_.size()));
        const AlgebraAmbient<F> ambient{&algebra_};
        const auto bad = first_violated_relation(ambient, presentation_, std::span(images_));
        if (bad)
            fail("RelationViolated", "relation " + presentation_.relation_string(*bad) + " does not vanish");
    }

    const FreePresentation& presentation() const { return presentation_; }
    const StructureConstantAlgebra<F>& algebra() const { return algebra_; }
    const std::vector<Element>& images() const { return images_; }

private:
    FreePresentation presentation_;
    StructureConstantAlgebra<F> algebra_;
    std::vector<Element> images_;
};

template <ExactField F>
AzuRep<F> azu_rep_construct(FreePresentation presentation, StructureConstantAlgebra<F> algebra,
                            std::vector<VectorOver<F>> images) {
    return AzuRep<F>(std::move(presentation), std::move(algebra), std::move(images));
}

/// Basis of {x in A : x y = y x for every y in `elements`}.
template <ExactField F>
std::vector<VectorOver<F>> centralizer_in_algebra(const StructureConstantAlgebra<F>& algebra,
                                                  std::span<const VectorOver<F>> elements) {
    const std::size_t m = algebra.dim();
    const auto& field = algebra.field();
    auto sys = zero_matrix(field, elements.size() * m, m);
    for (std::size_t k = 0; k < m; ++k) {
        const auto bk = algebra.basis_element(k);
        for (std::size_t g = 0; g < elements.size(); ++g) {
            const auto comm = algebra.subtract(algebra.multiply(bk, elements[g]), algebra.multiply(elements[g], bk));
            for (std::size_t r = 0; r < m; ++r) sys(g * m + r, k) = comm[r];
        }
    }
    return kernel_basis(field, sys);
}

template <ExactField F>
std::size_t azu_commutant_dim(const AzuRep<F>& rep) {
    return centralizer_in_algebra(rep.algebra(), std::span(rep.images())).size();
}

template <ExactField F>
bool is_schur_azu(const AzuRep<F>& rep) {
    return azu_commutant_dim(rep) == 1;
}

template <ExactField F>
struct RightIdeal {
    std::size_t dim = 0;
    std::vector<VectorOver<F>> basis;
};

/// e_i * A for a partition of unity into orthogonal idempotents.
/// Throws NotOrthogonalIdempotents unless e_i e_j = delta_ij e_i and sum e_i = 1.
template <ExactField F>
std::vector<RightIdeal<F>> idempotent_right_ideals(const StructureConstantAlgebra<F>& algebra,
                                                   std::span<const VectorOver<F>> idempotents) {
    if (idempotents.empty()) fail("NotOrthogonalIdempotents", "no idempotents given");
    auto sum = algebra.zero_element();
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        sum = algebra.add(sum, idempotents[i]);
        for (std::size_t j = 0; j < idempotents.size(); ++j) {
            const auto prod = algebra.multiply(idempotents[i], idempotents[j]);
            const auto expected = i == j ? idempotents[i] : algebra.zero_element();
            if (prod != expected)
                fail("NotOrthogonalIdempotents", "e" + std::to_string(i) + "*e" + std::to_string(j) +
                                                     (i == j ? " != e" + std::to_string(i) : " != 0"));
        }
    }
    if (sum != algebra.unit()) fail("NotOrthogonalIdempotents", "idempotents do not sum to 1");

    std::vector<RightIdeal<F>> ideals;
    for (const auto& e : idempotents) {
        SpanBuilder<F> span(algebra.field(), algebra.dim());
        for (std::size_t k = 0; k < algebra.dim(); ++k) span.add(algebra.multiply(e, algebra.basis_element(k)));
        ideals.push_back({span.dim(), span.members()});
    }
    return ideals;
}

/// Matrix of left multiplication by x: column k holds the coordinates of x * b_k.
template <ExactField F>
MatrixOver<F> left_multiplication(const StructureConstantAlgebra<F>& algebra, const VectorOver<F>& x) {
    const std::size_t m = algebra.dim();
    auto out = zero_matrix(algebra.field(), m, m);
    for (std::size_t k = 0; k < m; ++k) {
        const auto col = algebra.multiply(x, algebra.basis_element(k));
        for (std::size_t r = 0; r < m; ++r) out(r, k) = col[r];
    }
    return out;
}

/// Images L_{b_k} of the basis under the left regular representation.
template <ExactField F>
std::vector<MatrixOver<F>> regular_representation(const StructureConstantAlgebra<F>& algebra) {
    std::vector<MatrixOver<F>> out;
    for (std::size_t k = 0; k < algebra.dim(); ++k) out.push_back(left_multiplication(algebra, algebra.basis_element(k)));
    return out;
}

template <ExactField F>
struct CommutantAlgebra {
    StructureConstantAlgebra<F> algebra;
    std::vector<MatrixOver<F>> basis;  ///< embedding into Mat_m
};

/// Centralizer of the unital algebra generated by `matrices` inside Mat_m.
template <ExactField F>
CommutantAlgebra<F> commutant_algebra(const F& field, std::size_t m, std::span<const MatrixOver<F>> matrices) {
    auto comm = centralizer(field, m, matrices);
    auto algebra = algebra_from_matrix_basis(field, comm.basis);
    return {std::move(algebra), std::move(comm.basis)};
}

struct BicommutantReport {
    bool holds = false;
    std::size_t algebra_dim = 0;
    std::size_t commutant_dim = 0;
    std::size_t bicommutant_dim = 0;
};

/// Double centralizer: C(C(A)) == A for the unital span-closure A of `matrices`.
template <ExactField F>
BicommutantReport bicommutant_report(const F& field, std::size_t m, std::span<const MatrixOver<F>> matrices) {
    const auto closure = image_span_basis(field, m, matrices);
    const auto comm = centralizer(field, m, std::span(closure));
    const auto bicomm = centralizer(field, m, std::span(comm.basis));
    BicommutantReport report;
    report.algebra_dim = closure.size();
    report.commutant_dim = comm.dim();
    report.bicommutant_dim = bicomm.dim();
    // A is always inside C(C(A)); equal dimensions give equality.
    SpanBuilder<F> span(field, m * m);
    for (const auto& b : bicomm.basis) span.add(b.data());
    const bool contained = std::all_of(closure.begin(), closure.end(), [&](const auto& a) { return span.contains(a.data()); });
    report.holds = contained && report.algebra_dim == report.bicommutant_dim;
    return report;
}

template <ExactField F>
bool bicommutant_check(const F& field, std::size_t m, std::span<const MatrixOver<F>> matrices) {
    return bicommutant_report(field, m, matrices).holds;
}

/// Centre of a structure-constant algebra.
template <ExactField F>
std::size_t center_dim(const StructureConstantAlgebra<F>& algebra) {
    std::vector<VectorOver<F>> basis;
    for (std::size_t k = 0; k < algebra.dim(); ++k) basis.push_back(algebra.basis_element(k));
    return centralizer_in_algebra(algebra, std::span(basis)).size();
}

/// Central simple over its field: centre is the scalars and the left
/// regular image satisfies the double-centralizer identity.
template <ExactField F>
bool is_central_simple(const StructureConstantAlgebra<F>& algebra) {
    if (center_dim(algebra) != 1) return false;
    const auto reg = regular_representation(algebra);
    const auto report = bicommutant_report(algebra.field(), algebra.dim(), std::span(reg));
    return report.holds && report.algebra_dim * report.commutant_dim == algebra.dim() * algebra.dim();
}

}  // namespace schurforge
