#pragma once

// Quaternion classes in Br(Q)[2] via Hilbert symbols, and the geometric
// origin decision for Galois-stable Schur representations over Q(sqrt d).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schurforge/descent.hpp"
#include "schurforge/exactfield.hpp"

namespace schurforge {

/// A place of Q: a prime p, or the real place.
class Place {
public:
    static Place infinity() { return Place(); }
    /// Throws InvalidPrime unless p is prime.
    static Place prime(const mpz_class& p);

    bool is_infinite() const { return !prime_.has_value(); }
    const mpz_class& p() const { return prime_.value(); }
    std::string to_string() const { return prime_ ? prime_->get_str() : "inf"; }

    friend bool operator==(const Place&, const Place&) = default;

private:
    Place() = default;
    std::optional<mpz_class> prime_;
};

struct PlaceSymbol {
    Place place;
    int symbol;
};

using PlaceSymbols = std::vector<PlaceSymbol>;

/// (a, b) up to square classes, as squarefree integers.
struct QuaternionClass {
    mpz_class a;
    mpz_class b;

    friend bool operator==(const QuaternionClass&, const QuaternionClass&) = default;
};

QuaternionClass quaternion_class(const Rational& a, const Rational& b, std::uint64_t factor_bound = kDefaultFactorBound);

/// Local Hilbert symbol (a, b)_v. Throws ZeroInput when a or b vanishes.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place,
                   std::uint64_t factor_bound = kDefaultFactorBound);

/// Symbols at infinity, 2 and every odd prime dividing the reduced a*b.
PlaceSymbols all_symbols(const Rational& a, const Rational& b, std::uint64_t factor_bound = kDefaultFactorBound);

/// Places where the symbol is -1. The count is checked to be even.
PlaceSymbols ramified_places(const Rational& a, const Rational& b, std::uint64_t factor_bound = kDefaultFactorBound);

bool is_split(const Rational& a, const Rational& b, std::uint64_t factor_bound = kDefaultFactorBound);

struct SearchBounds {
    std::int64_t norm_search = kDefaultNormSearchBound;
    std::uint64_t factor = kDefaultFactorBound;
};

struct OriginReport {
    bool origin = false;
    Rational lambda;
    QuaternionClass quaternion_class;
    Cocycle cocycle;
    /// A representation over Q when the class splits, otherwise the twisted
    /// representation in the fixed algebra.
    std::variant<DescentResult, TwistedRep> witness;
    /// Set when the input was not Schur and a cocycle was found by search.
    bool schur = true;
};

/// prepare_twist -> class (d, lambda) -> descend if split, twist otherwise.
///
/// Non-Schur input is accepted only when some intertwiner to the Galois
/// conjugate is a split cocycle; the descended witness then certifies the
/// answer. Otherwise NotSchur is raised.
OriginReport geometric_origin_report(const QuadRep& rep, std::uint64_t seed = 0, const SearchBounds& bounds = {});

enum class DemoMode { real_sign, rational_square };

/// t^2 + lambda t + 1 with discriminant lambda^2 - 4: real-sign mode asks
/// whether it is positive, rational-square mode whether it is a square.
/// Throws DegenerateDiscriminant at lambda = +-2.
bool quadratic_origin_demo(const Rational& lambda, DemoMode mode, std::uint64_t factor_bound = kDefaultFactorBound);

}  // namespace schurforge
