#include "schurforge/brauer.hpp"

#include <random>

namespace schurforge {

Place Place::prime(const mpz_class& p) {
    if (!is_prime(p)) fail("InvalidPrime", p.get_str() + " is not prime");
    Place place;
    place.prime_ = p;
    return place;
}

QuaternionClass quaternion_class(const Rational& a, const Rational& b, std::uint64_t factor_bound) {
    if (a.is_zero() || b.is_zero()) fail("ZeroInput", "Hilbert symbol arguments must be nonzero");
    return {square_class(a, factor_bound).kernel, square_class(b, factor_bound).kernel};
}

namespace {

// x = p^valuation * unit with valuation in {0, 1} (x squarefree).
struct Split {
    unsigned valuation;
    mpz_class unit;
};

Split split_at(const mpz_class& x, const mpz_class& p) {
    if (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0) return {1, x / p};
    return {0, x};
}

// (u - 1)/2 mod 2 for odd u.
unsigned epsilon(const mpz_class& u) {
    const mpz_class half = (u - 1) / 2;
    return mpz_odd_p(half.get_mpz_t()) != 0 ? 1U : 0U;
}

// (u^2 - 1)/8 mod 2 for odd u.
unsigned omega(const mpz_class& u) {
    const mpz_class q = (u * u - 1) / 8;
    return mpz_odd_p(q.get_mpz_t()) != 0 ? 1U : 0U;
}

int symbol_of_squarefree(const mpz_class& a, const mpz_class& b, const Place& place) {
    if (place.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
    const mpz_class& p = place.p();
    const auto [alpha, u] = split_at(a, p);
    const auto [beta, v] = split_at(b, p);
    if (p == 2) {
        const unsigned e = epsilon(u) * epsilon(v) + alpha * omega(v) + beta * omega(u);
        return e % 2 == 0 ? 1 : -1;
    }
    int s = 1;
    const mpz_class half = (p - 1) / 2;
    if (alpha * beta == 1 && mpz_odd_p(half.get_mpz_t()) != 0) s = -s;
    if (beta == 1) s *= legendre_symbol(u, p);
    if (alpha == 1) s *= legendre_symbol(v, p);
    return s;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place, std::uint64_t factor_bound) {
    const auto cls = quaternion_class(a, b, factor_bound);
    return symbol_of_squarefree(cls.a, cls.b, place);
}

PlaceSymbols all_symbols(const Rational& a, const Rational& b, std::uint64_t factor_bound) {
    const auto cls = quaternion_class(a, b, factor_bound);
    std::vector<Place> places{Place::infinity(), Place::prime(2)};
    const mpz_class product = cls.a * cls.b;
    for (const auto& [p, e] : factor_integer(product, factor_bound))
        if (p != 2) places.push_back(Place::prime(p));
    PlaceSymbols out;
    for (const auto& place : places) out.push_back({place, symbol_of_squarefree(cls.a, cls.b, place)});
    return out;
}

PlaceSymbols ramified_places(const Rational& a, const Rational& b, std::uint64_t factor_bound) {
    PlaceSymbols out;
    for (auto& s : all_symbols(a, b, factor_bound))
        if (s.symbol == -1) out.push_back(std::move(s));
    if (out.size() % 2 != 0)
        fail("InternalError", "odd number of ramified places for (" + a.to_string() + ", " + b.to_string() + ")");
    return out;
}

bool is_split(const Rational& a, const Rational& b, std::uint64_t factor_bound) {
    return ramified_places(a, b, factor_bound).empty();
}

// ---------------------------------------------------------------------------

namespace {

OriginReport finish_report(const QuadRep& rep, Cocycle cocycle, std::uint64_t seed, const SearchBounds& bounds) {
    const Rational d(rep.field().d());
    const Rational lambda = cocycle.lambda;
    const auto cls = quaternion_class(d, lambda, bounds.factor);
    if (is_split(d, lambda, bounds.factor)) {
        const auto c = norm_solve(rep.field(), lambda, bounds.norm_search, bounds.factor);
        if (!c)
            throw BudgetExhausted("lambda = " + lambda.to_string() + " is certified to be a norm but no solution has "
                                  "height <= " + std::to_string(bounds.norm_search));
        auto descent = descend_representation(rep, cocycle, *c, seed);
        return {true, lambda, cls, std::move(cocycle), std::move(descent)};
    }
    auto twisted = twist_representation(rep, cocycle);
    return {false, lambda, cls, std::move(cocycle), std::move(twisted)};
}

}  // namespace

OriginReport geometric_origin_report(const QuadRep& rep, std::uint64_t seed, const SearchBounds& bounds) {
    if (is_schur(rep)) {
        auto prepared = prepare_twist(rep, seed);
        return finish_report(rep, std::move(prepared.cocycle), seed, bounds);
    }

    // Non-Schur: look for a split cocycle among the intertwiners to sigma(rho).
    const auto& field = rep.field();
    const std::size_t n = rep.degree();
    const auto space = intertwiner_space(rep, galois_translate(rep));
    if (space.empty()) fail("NotGaloisStable", "the Galois conjugate representation is not isomorphic");

    std::vector<VectorOver<QuadField>> candidates = space;
    VectorOver<QuadField> sum(n * n, field.zero());
    for (const auto& v : space)
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
    candidates.push_back(sum);
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < kIntertwinerRandomBudget; ++attempt) {
        VectorOver<QuadField> v(n * n, field.zero());
        for (const auto& b : space) {
            const auto c = field.from_int(small_integer(rng));
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
        }
        candidates.push_back(std::move(v));
    }
    for (const auto& v : candidates) {
        auto s = square_from_vector(field, n, v);
        if (!is_invertible(field, s)) continue;
        std::optional<Cocycle> cocycle;
        try {
            cocycle = make_cocycle(field, std::move(s));
        } catch (const Error&) {
            continue;
        }
        if (!is_split(Rational(field.d()), cocycle->lambda, bounds.factor)) continue;
        auto report = finish_report(rep, std::move(*cocycle), seed, bounds);
        report.schur = false;
        return report;
    }
    fail("NotSchur", "representation is not Schur and no split cocycle was found among its Galois intertwiners");
}

bool quadratic_origin_demo(const Rational& lambda, DemoMode mode, std::uint64_t factor_bound) {
    const Rational discriminant = lambda * lambda - Rational(4);
    if (discriminant.is_zero())
        fail("DegenerateDiscriminant", "lambda = " + lambda.to_string() + " lies on the branch locus");
    if (mode == DemoMode::real_sign) return discriminant.sign() > 0;
    return is_square_rational(discriminant, factor_bound);
}

}  // namespace schurforge
