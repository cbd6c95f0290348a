#pragma once

// Representations of a finitely presented algebra in Mat_n(K).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "schurforge/algebra.hpp"
#include "schurforge/exactfield.hpp"
#include "schurforge/matrix.hpp"
#include "schurforge/ncpoly.hpp"

namespace schurforge {

template <ExactField F>
class MatrixRep {
public:
    /// Validates shapes and every relation of the presentation.
    MatrixRep(FreePresentation presentation, F field, std::size_t n, std::vector<MatrixOver<F>> images)
        : presentation_(std::move(presentation)), field_(std::move(field)), n_(n), images_(std::move(images)) {
        if (n_ == 0) fail("DimensionMismatch", "representation degree must be positive");
        if (images_.size() != presentation_.generator_count())
            fail("DimensionMismatch", "expected " + std::to_string(presentation_.generator_count()) +
                                          " generator images, got " + std::to_string(images_.size()));
        for (std::size_t g = 0; g < images_.size(); ++g)
            if (images_[g].rows() != n_ || images_[g].cols() != n_)
                fail("DimensionMismatch", "image of '" + presentation_.generators()[g] + "' is " +
                                              images_[g].shape() + ", expected " + std::to_string(n_) + "x" +
                                              std::to_string(n_));
        const auto bad = first_violated_relation(ambient(), presentation_, std::span(images_));
        if (bad)
            fail("RelationViolated", "relation " + presentation_.relation_string(*bad) + " does not vanish");
    }

    const FreePresentation& presentation() const { return presentation_; }
    const F& field() const { return field_; }
    std::size_t degree() const { return n_; }
    const std::vector<MatrixOver<F>>& images() const { return images_; }
    const MatrixOver<F>& image(std::size_t generator) const { return images_.at(generator); }
    MatrixAmbient<F> ambient() const { return {field_, n_}; }

    friend bool operator==(const MatrixRep& a, const MatrixRep& b) {
        return a.presentation_ == b.presentation_ && a.field_ == b.field_ && a.n_ == b.n_ && a.images_ == b.images_;
    }

private:
    FreePresentation presentation_;
    F field_;
    std::size_t n_;
    std::vector<MatrixOver<F>> images_;
};

/// Linear system for {X : X*right[i] = left[i]*X for all i} in the row-major
/// coordinates of X; one block of n^2 rows per pair.
template <ExactField F>
MatrixOver<F> intertwiner_system(const F& field, std::size_t n, std::span<const MatrixOver<F>> left,
                                 std::span<const MatrixOver<F>> right) {
    if (left.size() != right.size()) fail("DimensionMismatch", "intertwiner system needs paired images");
    auto sys = zero_matrix(field, left.size() * n * n, n * n);
    for (std::size_t g = 0; g < left.size(); ++g) {
        const auto& a = left[g];
        const auto& b = right[g];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t row = (g * n + r) * n + c;
                // (X b)_{rc} = sum_k X_{rk} b_{kc};  (a X)_{rc} = sum_k a_{rk} X_{kc}
                for (std::size_t k = 0; k < n; ++k) {
                    sys(row, r * n + k) += b(k, c);
                    sys(row, k * n + c) -= a(r, k);
                }
            }
    }
    return sys;
}

/// The map Psi: f -> (f rho(g_i) - rho(g_i) f)_i as a matrix.
template <ExactField F>
MatrixOver<F> psi_matrix(const MatrixRep<F>& rep) {
    return intertwiner_system(rep.field(), rep.degree(), std::span(rep.images()), std::span(rep.images()));
}

template <ExactField F>
struct CommutantBasis {
    std::size_t n = 0;
    std::vector<MatrixOver<F>> basis;
    std::size_t psi_rank = 0;

    std::size_t dim() const { return basis.size(); }
};

/// Centralizer of a family of n x n matrices.
template <ExactField F>
CommutantBasis<F> centralizer(const F& field, std::size_t n, std::span<const MatrixOver<F>> matrices) {
    CommutantBasis<F> out;
    out.n = n;
    if (matrices.empty()) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) out.basis.push_back(unit_matrix(field, n, r, c));
        return out;
    }
    const auto sys = intertwiner_system(field, n, matrices, matrices);
    out.psi_rank = rank(field, sys);
    for (auto& v : kernel_basis(field, sys)) out.basis.push_back(square_from_vector(field, n, v));
    return out;
}

template <ExactField F>
CommutantBasis<F> commutant_basis(const MatrixRep<F>& rep) {
    return centralizer(rep.field(), rep.degree(), std::span(rep.images()));
}

template <ExactField F>
bool is_schur(const MatrixRep<F>& rep) {
    return commutant_basis(rep).dim() == 1;
}

template <ExactField F>
struct EndomorphismAlgebra {
    StructureConstantAlgebra<F> algebra;
    std::vector<MatrixOver<F>> basis;  ///< the commutant basis the table refers to
};

template <ExactField F>
EndomorphismAlgebra<F> endomorphism_structure_constants(const MatrixRep<F>& rep) {
    auto comm = commutant_basis(rep);
    auto algebra = algebra_from_matrix_basis(rep.field(), comm.basis);
    return {std::move(algebra), std::move(comm.basis)};
}

/// Basis of the span of all words in the generator images (including the
/// empty word), grown by right multiplication with generators until stable.
template <ExactField F>
std::vector<MatrixOver<F>> image_span_basis(const F& field, std::size_t n, std::span<const MatrixOver<F>> generators) {
    SpanBuilder<F> span(field, n * n);
    std::vector<MatrixOver<F>> members;
    auto push = [&](const MatrixOver<F>& m) {
        if (span.add(m.data())) members.push_back(m);
    };
    push(identity_matrix(field, n));
    for (std::size_t next = 0; next < members.size(); ++next)
        for (const auto& g : generators) push(members[next] * g);
    return members;
}

template <ExactField F>
std::size_t image_span_dim(const MatrixRep<F>& rep) {
    return image_span_basis(rep.field(), rep.degree(), std::span(rep.images())).size();
}

/// Burnside: the image spans all of Mat_n.
template <ExactField F>
bool is_absolutely_simple(const MatrixRep<F>& rep) {
    return image_span_dim(rep) == rep.degree() * rep.degree();
}

enum class IntertwinerStatus {
    found,
    provably_none,     ///< solution space is zero, or a line of singular matrices
    budget_exhausted,  ///< nonzero solutions exist but no invertible one was sampled
};

inline const char* to_string(IntertwinerStatus s) {
    switch (s) {
        case IntertwinerStatus::found: return "found";
        case IntertwinerStatus::provably_none: return "provably_none";
        case IntertwinerStatus::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

template <ExactField F>
struct IntertwinerResult {
    IntertwinerStatus status = IntertwinerStatus::provably_none;
    std::optional<MatrixOver<F>> intertwiner;  ///< S with S * target(g) = source(g) * S
    std::size_t solution_dim = 0;
};

inline constexpr std::size_t kIntertwinerRandomBudget = 32;

/// Basis (row-major coordinates) of {S : S * target(g) = source(g) * S}.
template <ExactField F>
std::vector<VectorOver<F>> intertwiner_space(const MatrixRep<F>& source, const MatrixRep<F>& target) {
    if (!(source.presentation() == target.presentation()))
        fail("PresentationMismatch", "representations of different presentations");
    if (source.degree() != target.degree() || !(source.field() == target.field()))
        fail("DimensionMismatch", "representations differ in degree or field");
    const std::size_t n = source.degree();
    return kernel_basis(source.field(),
                        intertwiner_system(source.field(), n, std::span(source.images()), std::span(target.images())));
}

/// Small integer in [-3, 3] drawn from the stream.
inline long small_integer(std::mt19937_64& rng) { return static_cast<long>(rng() % 7) - 3; }

/// Searches {S : S * target(g) = source(g) * S} for an invertible element:
/// basis vectors first, then seeded random small-integer combinations.
template <ExactField F>
IntertwinerResult<F> find_intertwiner(const MatrixRep<F>& source, const MatrixRep<F>& target, std::uint64_t seed = 0,
                                      std::size_t random_budget = kIntertwinerRandomBudget) {
    const auto& field = source.field();
    const std::size_t n = source.degree();

    const auto space = intertwiner_space(source, target);
    IntertwinerResult<F> result;
    result.solution_dim = space.size();
    if (space.empty()) return result;

    auto accept = [&](const VectorOver<F>& v) {
        auto s = square_from_vector(field, n, v);
        if (!is_invertible(field, s)) return false;
        result.status = IntertwinerStatus::found;
        result.intertwiner = std::move(s);
        return true;
    };
    for (const auto& v : space)
        if (accept(v)) return result;
    if (space.size() == 1) return result;  // every solution is a multiple of a singular one

    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < random_budget; ++attempt) {
        VectorOver<F> v(n * n, field.zero());
        for (const auto& b : space) {
            const auto c = field.from_int(small_integer(rng));
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
        }
        if (accept(v)) return result;
    }
    result.status = IntertwinerStatus::budget_exhausted;
    return result;
}

template <ExactField F>
bool are_isomorphic(const MatrixRep<F>& a, const MatrixRep<F>& b, std::uint64_t seed = 0) {
    if (a.degree() != b.degree()) return false;
    return find_intertwiner(a, b, seed).status == IntertwinerStatus::found;
}

/// C * rho * C^-1.
template <ExactField F>
MatrixRep<F> conjugate_rep(const MatrixRep<F>& rep, const MatrixOver<F>& c) {
    const auto c_inv = inverse(rep.field(), c);
    if (!c_inv) fail("Singular", "conjugating matrix is singular");
    std::vector<MatrixOver<F>> images;
    for (const auto& m : rep.images()) images.push_back(c * m * *c_inv);
    return MatrixRep<F>(rep.presentation(), rep.field(), rep.degree(), std::move(images));
}

}  // namespace schurforge
