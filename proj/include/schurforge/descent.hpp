#pragma once

// Quadratic Galois descent and twisting.
//
// L = Q(sqrt d) with sigma(a + b sqrt d) = a - b sqrt d. A cocycle is an
// invertible S over L with S * sigma(S) = lambda * I, lambda in Q*. It
// defines the semilinear involution x -> S sigma(x) S^-1 on Mat_n(L), whose
// fixed points form a Q-form of Mat_n (the twisted algebra).

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "schurforge/azumaya.hpp"
#include "schurforge/exactfield.hpp"
#include "schurforge/matrep.hpp"
#include "schurforge/matrix.hpp"

namespace schurforge {

using QuadMatrix = Matrix<QuadElem>;
using RationalMatrix = Matrix<Rational>;
using QuadRep = MatrixRep<QuadField>;
using RationalRep = MatrixRep<RationalField>;

inline constexpr std::int64_t kDefaultNormSearchBound = 200;
inline constexpr std::size_t kHilbert90Budget = 64;

/// Entrywise sigma.
QuadMatrix conjugate_entries(const QuadMatrix& m);

QuadMatrix base_change(const QuadField& field, const RationalMatrix& m);
QuadRep base_change(const RationalRep& rep, const QuadField& field);

/// The matrix itself when every entry lies in Q.
std::optional<RationalMatrix> rational_part(const QuadMatrix& m);

struct Cocycle {
    QuadField field;
    QuadMatrix S;
    Rational lambda;
};

/// lambda with S sigma(S) = lambda I. Throws NotACocycle otherwise.
Rational cocycle_scalar(const QuadField& field, const QuadMatrix& s);

Cocycle make_cocycle(const QuadField& field, QuadMatrix s);

/// Same generators, every image conjugated entrywise.
QuadRep galois_translate(const QuadRep& rep);

/// Generators g with S sigma(rho(g)) S^-1 != rho(g).
std::vector<std::size_t> unfixed_generators(const QuadRep& rep, const Cocycle& cocycle);

/// A Q-form of Mat_n(L) together with its inclusion.
struct TwistedAlgebra {
    QuadField field;
    std::size_t n = 0;
    RationalAlgebra algebra;
    std::vector<QuadMatrix> basis;

    QuadMatrix embed(const RationalAlgebra::Element& x) const;
    /// Throws NotInSpan for matrices outside the twisted algebra.
    RationalAlgebra::Element coordinates(const QuadMatrix& m) const;
};

/// Fixed points of x -> S sigma(x) S^-1, as the kernel of a Q-linear map on
/// the 2n^2-dimensional Q-space Mat_n(L).
TwistedAlgebra semilinear_fixed_algebra(const Cocycle& cocycle);

/// Basis 1, u, v, uv of a four-dimensional algebra with u^2 = a, v^2 = b,
/// uv = -vu, so that rebasing yields exactly the table of H(a, b).
struct QuaternionMatch {
    Rational a;
    Rational b;
    std::array<RationalAlgebra::Element, 4> basis;
};

/// Candidates for u and v: the hints, then basis elements, then small
/// integer combinations. Returns nullopt if none fits.
std::optional<QuaternionMatch> match_quaternion(const RationalAlgebra& algebra,
                                                std::span<const RationalAlgebra::Element> hints = {});

struct TwistedRep {
    TwistedAlgebra twisted;
    AzuRep<RationalField> rep;
    std::optional<QuaternionMatch> quaternion;
};

/// Throws NotFixed naming the first generator moved by the twisted action.
TwistedRep twist_representation(const QuadRep& rep, const Cocycle& cocycle);

struct PreparedTwist {
    Cocycle cocycle;
    QuadRep rep;
};

/// S with S sigma(rho)(g) S^-1 = rho(g). Throws NotSchur, NotGaloisStable or
/// BudgetExhausted.
PreparedTwist prepare_twist(const QuadRep& rep, std::uint64_t seed = 0);

/// P = M + S' sigma(M) for M = I, then seeded random small M, until invertible.
/// Requires S' sigma(S') = I (NotACocycle otherwise).
QuadMatrix effective_hilbert90(const QuadField& field, const QuadMatrix& s, std::uint64_t seed = 0,
                               std::size_t budget = kHilbert90Budget);

struct DescentResult {
    RationalRep rep;  ///< P^-1 rho P, defined over Q
    QuadMatrix P;
};

/// Requires N(c) = lambda (NormMismatch) and rho fixed by the cocycle (NotFixed).
DescentResult descend_representation(const QuadRep& rep, const Cocycle& cocycle, const QuadElem& c,
                                     std::uint64_t seed = 0);

/// c with N(c) = lambda. lambda is first reduced modulo norms to a
/// squarefree k with |k| <= |d|, then c0 = (x + y sqrt d)/q with
/// |x|, |y|, q <= bound is searched for N(c0) = k.
std::optional<QuadElem> norm_solve(const QuadField& field, const Rational& lambda,
                                   std::int64_t bound = kDefaultNormSearchBound,
                                   std::uint64_t factor_bound = kDefaultFactorBound);

}  // namespace schurforge
