#pragma once

// Noncommutative polynomials over Q, finite presentations and path algebras.
//
// Words are sequences of generator indices read left to right as products;
// the empty word is 1. Coefficients are rational and get mapped into the
// target field only when a polynomial is evaluated, so one presentation
// serves every field.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schurforge/exactfield.hpp"
#include "schurforge/matrix.hpp"

namespace schurforge {

using Word = std::vector<std::size_t>;

struct Term {
    Rational coeff;
    Word word;

    friend bool operator==(const Term&, const Term&) = default;
};

class NcPoly {
public:
    NcPoly() = default;
    /// Merges repeated words (first occurrence fixes the order) and drops zeros.
    explicit NcPoly(std::vector<Term> terms);

    static NcPoly constant(const Rational& c) { return NcPoly({{c, {}}}); }
    static NcPoly monomial(Word word, const Rational& c = 1) { return NcPoly({{c, std::move(word)}}); }
    static NcPoly generator(std::size_t index) { return monomial({index}); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// One past the largest generator index used (0 for constants).
    std::size_t generator_bound() const;

    NcPoly operator-() const;
    friend NcPoly operator+(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator-(const NcPoly& a, const NcPoly& b) { return a + (-b); }
    /// Product in the free algebra: concatenation of words.
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator*(const Rational& c, const NcPoly& p);

    friend bool operator==(const NcPoly&, const NcPoly&) = default;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<Term> terms_;
};

class FreePresentation {
public:
    FreePresentation() = default;
    /// Throws DuplicateGenerator / UnknownGenerator on malformed input.
    FreePresentation(std::vector<std::string> generators, std::vector<NcPoly> relations);

    const std::vector<std::string>& generators() const { return generators_; }
    const std::vector<NcPoly>& relations() const { return relations_; }
    std::size_t generator_count() const { return generators_.size(); }
    std::optional<std::size_t> generator_index(const std::string& name) const;

    std::string relation_string(std::size_t index) const { return relations_.at(index).to_string(generators_); }

    friend bool operator==(const FreePresentation&, const FreePresentation&) = default;

private:
    std::vector<std::string> generators_;
    std::vector<NcPoly> relations_;
};

struct Arrow {
    std::size_t source;
    std::size_t target;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver; loops and multiple arrows are allowed.
class Quiver {
public:
    Quiver() = default;
    /// Throws EmptyQuiver for zero vertices, InvalidQuiver for out-of-range endpoints.
    Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Arrow> arrows_;
};

/// Generators e0..e{V-1} then f0..f{A-1}. Relations, in order:
///   e_i e_j - [i=j] e_i,   f_a e_i - [src a = i] f_a,   e_j f_b - [j = tgt b] f_b,   sum e_i - 1.
FreePresentation path_algebra(const Quiver& quiver);

inline std::size_t vertex_generator(const Quiver&, std::size_t vertex) { return vertex; }
inline std::size_t arrow_generator(const Quiver& quiver, std::size_t arrow) { return quiver.vertex_count() + arrow; }

// ---------------------------------------------------------------------------
// Evaluation

/// Something polynomials can be evaluated in: an associative unital algebra
/// over a field, with a shape check for incoming values.
template <class A>
concept Ambient = requires(const A& amb, const typename A::value_type& x, const Rational& c) {
    typename A::value_type;
    { amb.identity() } -> std::same_as<typename A::value_type>;
    { amb.zero() } -> std::same_as<typename A::value_type>;
    { amb.add(x, x) } -> std::same_as<typename A::value_type>;
    { amb.multiply(x, x) } -> std::same_as<typename A::value_type>;
    { amb.scale(c, x) } -> std::same_as<typename A::value_type>;
    { amb.is_zero(x) } -> std::convertible_to<bool>;
    { amb.fits(x) } -> std::convertible_to<bool>;
};

/// Mat_n over a field.
template <ExactField F>
struct MatrixAmbient {
    using value_type = MatrixOver<F>;

    F field;
    std::size_t n;

    value_type identity() const { return identity_matrix(field, n); }
    value_type zero() const { return zero_matrix(field, n, n); }
    value_type add(const value_type& x, const value_type& y) const { return x + y; }
    value_type multiply(const value_type& x, const value_type& y) const { return x * y; }
    value_type scale(const Rational& c, const value_type& x) const { return x * field.from_rational(c); }
    bool is_zero(const value_type& x) const { return x.is_zero(); }
    bool fits(const value_type& x) const { return x.rows() == n && x.cols() == n; }
};

template <Ambient A>
typename A::value_type eval_poly(const A& ambient, const NcPoly& poly,
                                 std::span<const typename A::value_type> assignment) {
    for (const auto& term : poly.terms())
        for (auto g : term.word) {
            if (g >= assignment.size())
                fail("UnboundGenerator", "generator index " + std::to_string(g) + " has no assigned value");
            if (!ambient.fits(assignment[g]))
                fail("DimensionMismatch", "value of generator " + std::to_string(g) + " has the wrong shape");
        }
    auto total = ambient.zero();
    for (const auto& term : poly.terms()) {
        auto value = ambient.identity();
        for (auto g : term.word) value = ambient.multiply(value, assignment[g]);
        total = ambient.add(total, ambient.scale(term.coeff, value));
    }
    return total;
}

/// Index of the first relation that does not vanish, if any.
template <Ambient A>
std::optional<std::size_t> first_violated_relation(const A& ambient, const FreePresentation& pres,
                                                   std::span<const typename A::value_type> assignment) {
    for (std::size_t i = 0; i < pres.relations().size(); ++i)
        if (!ambient.is_zero(eval_poly(ambient, pres.relations()[i], assignment))) return i;
    return std::nullopt;
}

template <Ambient A>
bool check_relations(const A& ambient, const FreePresentation& pres,
                     std::span<const typename A::value_type> assignment) {
    return !first_violated_relation(ambient, pres, assignment).has_value();
}

}  // namespace schurforge
