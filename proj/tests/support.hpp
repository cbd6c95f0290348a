#pragma once

// Builders and random generators shared by the test binaries.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "schurforge/azumaya.hpp"
#include "schurforge/brauer.hpp"
#include "schurforge/descent.hpp"
#include "schurforge/matrep.hpp"
#include "schurforge/quiverkit.hpp"

namespace sf_test {

using namespace schurforge;

/// Name of the library error thrown by fn, or "" if none.
template <class Fn>
std::string error_name(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.name();
    }
    return "";
}

inline Rational q(const char* text) { return Rational::parse(text); }

/// Rational matrix from string literals.
inline RationalMatrix qmat(std::initializer_list<std::initializer_list<const char*>> rows) {
    std::vector<Rational> data;
    std::size_t cols = 0;
    for (const auto& row : rows) {
        cols = row.size();
        for (const char* x : row) data.push_back(Rational::parse(x));
    }
    return RationalMatrix(rows.size(), cols, std::move(data));
}

/// Entry a + b sqrt(d) written as {a, b}.
struct QE {
    long a;
    long b = 0;
};

inline QuadMatrix lmat(const QuadField& field, std::initializer_list<std::initializer_list<QE>> rows) {
    std::vector<QuadElem> data;
    std::size_t cols = 0;
    for (const auto& row : rows) {
        cols = row.size();
        for (const auto& x : row) data.push_back(field.element(x.a, x.b));
    }
    return QuadMatrix(rows.size(), cols, std::move(data));
}

template <ExactField F>
MatrixOver<F> int_matrix(const F& field, std::size_t n, std::initializer_list<long> entries) {
    VectorOver<F> data;
    for (long x : entries) data.push_back(field.from_int(x));
    return MatrixOver<F>(n, n, std::move(data));
}

inline FreePresentation free_algebra(std::vector<std::string> names) { return FreePresentation(std::move(names), {}); }

/// Generators t1..tk, no relations.
inline FreePresentation free_on(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i) names.push_back("t" + std::to_string(i));
    return free_algebra(std::move(names));
}

template <ExactField F>
MatrixRep<F> rep_of(const F& field, std::vector<MatrixOver<F>> images) {
    const std::size_t n = images.front().rows();
    auto presentation = free_on(images.size());
    return MatrixRep<F>(std::move(presentation), field, n, std::move(images));
}

// ---------------------------------------------------------------------------
// Random data

inline long small(std::mt19937_64& rng, long radius) {
    return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * radius + 1)) - radius;
}

inline Rational random_rational(std::mt19937_64& rng, long radius = 5) {
    const long den = 1 + static_cast<long>(rng() % 3);
    return Rational(small(rng, radius)) / Rational(den);
}

inline Rational random_element(const RationalField&, std::mt19937_64& rng, long radius) {
    return Rational(small(rng, radius));
}
inline QuadElem random_element(const QuadField& f, std::mt19937_64& rng, long radius) {
    const long a = small(rng, radius);
    return f.element(a, small(rng, radius));
}
inline PrimeFieldElem random_element(const PrimeField& f, std::mt19937_64& rng, long radius) {
    return f.from_int(small(rng, radius));
}

template <ExactField F>
MatrixOver<F> random_matrix(const F& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng, long radius = 2) {
    auto m = zero_matrix(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(field, rng, radius);
    return m;
}

/// Sparse-ish random matrices so that non-Schur reps also show up.
template <ExactField F>
MatrixOver<F> random_sparse_matrix(const F& field, std::size_t n, std::mt19937_64& rng) {
    auto m = zero_matrix(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (rng() % 3 == 0) m(r, c) = random_element(field, rng, 2);
    return m;
}

template <ExactField F>
MatrixOver<F> random_invertible(const F& field, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        auto m = random_matrix(field, n, n, rng, 2);
        if (is_invertible(field, m)) return m;
    }
}

template <ExactField F>
MatrixRep<F> random_rep(const F& field, std::size_t n, std::size_t generators, std::mt19937_64& rng) {
    std::vector<MatrixOver<F>> images;
    for (std::size_t g = 0; g < generators; ++g)
        images.push_back(rng() % 2 == 0 ? random_matrix(field, n, n, rng) : random_sparse_matrix(field, n, rng));
    return rep_of(field, std::move(images));
}

inline Quiver random_quiver(std::mt19937_64& rng, std::size_t max_vertices = 4, std::size_t max_arrows = 5) {
    const std::size_t v = 1 + rng() % max_vertices;
    const std::size_t a = rng() % (max_arrows + 1);
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < a; ++i) arrows.push_back({static_cast<std::size_t>(rng() % v), static_cast<std::size_t>(rng() % v)});
    return Quiver(v, std::move(arrows));
}

/// Dimension vector with total in [1, max_total].
inline DimVector random_dims(std::mt19937_64& rng, std::size_t vertices, std::size_t max_total) {
    for (;;) {
        DimVector dims(vertices);
        std::size_t total = 0;
        for (auto& d : dims) {
            d = rng() % 3;
            total += d;
        }
        if (total >= 1 && total <= max_total) return dims;
    }
}

template <ExactField F>
QuiverRep<F> random_quiver_rep(const F& field, const Quiver& quiver, const DimVector& dims, std::mt19937_64& rng) {
    std::vector<MatrixOver<F>> maps;
    for (const auto& arrow : quiver.arrows()) {
        const auto rows = dims[arrow.target];
        const auto cols = dims[arrow.source];
        maps.push_back(random_matrix(field, rows, cols, rng, 2));
    }
    return QuiverRep<F>(quiver, field, dims, std::move(maps));
}

// ---------------------------------------------------------------------------
// Fixed examples

inline QuadField gaussian() { return QuadField(-1); }

/// t1 -> diag(i, -i), t2 -> [[0,1],[-1,0]] over Q(i).
inline QuadRep quaternionic_pair() {
    const auto L = gaussian();
    return MatrixRep<QuadField>(free_on(2), L, 2,
                                {lmat(L, {{{0, 1}, {0}}, {{0}, {0, -1}}}), lmat(L, {{{0}, {1}}, {{-1}, {0}}})});
}

/// diag(1,2) and the swap over Q.
inline RationalRep diag_swap() {
    return rep_of(RationalField{}, {qmat({{"1", "0"}, {"0", "2"}}), qmat({{"0", "1"}, {"1", "0"}})});
}

inline RationalMatrix jordan2() { return qmat({{"0", "1"}, {"0", "0"}}); }

}  // namespace sf_test
