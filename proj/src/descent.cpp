#include "schurforge/descent.hpp"

#include <random>

namespace schurforge {

QuadMatrix conjugate_entries(const QuadMatrix& m) {
    return m.map([](const QuadElem& x) { return quad_conjugate(x); });
}

QuadMatrix base_change(const QuadField& field, const RationalMatrix& m) {
    return m.map([&](const Rational& x) { return field.from_rational(x); });
}

QuadRep base_change(const RationalRep& rep, const QuadField& field) {
    std::vector<QuadMatrix> images;
    for (const auto& m : rep.images()) images.push_back(base_change(field, m));
    return QuadRep(rep.presentation(), field, rep.degree(), std::move(images));
}

std::optional<RationalMatrix> rational_part(const QuadMatrix& m) {
    for (const auto& x : m.data())
        if (!x.is_rational()) return std::nullopt;
    return m.map([](const QuadElem& x) { return x.a(); });
}

Rational cocycle_scalar(const QuadField& field, const QuadMatrix& s) {
    if (!s.is_square()) fail("NotACocycle", "cocycle matrix must be square");
    const auto prod = s * conjugate_entries(s);
    const QuadElem lambda = prod(0, 0);
    if (!lambda.is_rational() || lambda.is_zero())
        fail("NotACocycle", "S*sigma(S) has corner entry " + lambda.to_string() + " outside Q*");
    if (prod != identity_matrix(field, s.rows()) * lambda) fail("NotACocycle", "S*sigma(S) is not a scalar matrix");
    return lambda.a();
}

Cocycle make_cocycle(const QuadField& field, QuadMatrix s) {
    Rational lambda = cocycle_scalar(field, s);
    return {field, std::move(s), std::move(lambda)};
}

QuadRep galois_translate(const QuadRep& rep) {
    std::vector<QuadMatrix> images;
    for (const auto& m : rep.images()) images.push_back(conjugate_entries(m));
    return QuadRep(rep.presentation(), rep.field(), rep.degree(), std::move(images));
}

namespace {

QuadMatrix inverse_or_throw(const QuadField& field, const QuadMatrix& m) {
    auto inv = inverse(field, m);
    if (!inv) fail("Singular", "matrix is not invertible");
    return *inv;
}

// Mat_n(L) as a Q-space: a-parts of the entries, then b-parts.
std::vector<Rational> flatten(const QuadMatrix& m) {
    std::vector<Rational> out;
    out.reserve(2 * m.data().size());
    for (const auto& x : m.data()) out.push_back(x.a());
    for (const auto& x : m.data()) out.push_back(x.b());
    return out;
}

QuadMatrix unflatten(const QuadField& field, std::size_t n, const std::vector<Rational>& v) {
    auto m = zero_matrix(field, n, n);
    for (std::size_t t = 0; t < n * n; ++t) m(t / n, t % n) = field.element(v[t], v[n * n + t]);
    return m;
}

}  // namespace

std::vector<std::size_t> unfixed_generators(const QuadRep& rep, const Cocycle& cocycle) {
    if (cocycle.S.rows() != rep.degree() || !(cocycle.field == rep.field()))
        fail("DimensionMismatch", "cocycle does not match the representation");
    const auto s_inv = inverse_or_throw(cocycle.field, cocycle.S);
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < rep.images().size(); ++g)
        if (cocycle.S * conjugate_entries(rep.image(g)) * s_inv != rep.image(g)) out.push_back(g);
    return out;
}

QuadMatrix TwistedAlgebra::embed(const RationalAlgebra::Element& x) const {
    if (x.size() != basis.size()) fail("DimensionMismatch", "element has the wrong number of coordinates");
    auto out = zero_matrix(field, n, n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!x[k].is_zero()) out += basis[k] * field.from_rational(x[k]);
    return out;
}

RationalAlgebra::Element TwistedAlgebra::coordinates(const QuadMatrix& m) const {
    std::vector<std::vector<Rational>> flat;
    for (const auto& b : basis) flat.push_back(flatten(b));
    const CoordinateSolver<RationalField> solver(RationalField{}, 2 * n * n, flat);
    return solver.solve(flatten(m));
}

TwistedAlgebra semilinear_fixed_algebra(const Cocycle& cocycle) {
    const auto& field = cocycle.field;
    const std::size_t n = cocycle.S.rows();
    // Re-derive lambda so hand-built cocycles are checked too.
    cocycle_scalar(field, cocycle.S);
    const auto s_inv = inverse_or_throw(field, cocycle.S);
    const std::size_t len = 2 * n * n;

    // Column t: image of the t-th Q-basis element under x -> S sigma(x) S^-1 - x.
    auto op = zero_matrix(RationalField{}, len, len);
    for (std::size_t t = 0; t < len; ++t) {
        std::vector<Rational> e(len, Rational(0));
        e[t] = 1;
        const auto x = unflatten(field, n, e);
        const auto col = flatten(cocycle.S * conjugate_entries(x) * s_inv - x);
        for (std::size_t r = 0; r < len; ++r) op(r, t) = col[r];
    }
    const auto kernel = kernel_basis(RationalField{}, op);
    if (kernel.size() != n * n)
        fail("InternalError", "fixed algebra has dimension " + std::to_string(kernel.size()) + ", expected " +
                                  std::to_string(n * n));
    std::vector<QuadMatrix> basis;
    for (const auto& v : kernel) basis.push_back(unflatten(field, n, v));

    const CoordinateSolver<RationalField> solver(RationalField{}, len, kernel);
    std::vector<Rational> constants;
    for (const auto& x : basis)
        for (const auto& y : basis) {
            const auto c = solver.solve(flatten(x * y));
            constants.insert(constants.end(), c.begin(), c.end());
        }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < basis.size(); ++k) names.push_back("b" + std::to_string(k));
    RationalAlgebra algebra(RationalField{}, std::move(names), std::move(constants),
                            solver.solve(flatten(identity_matrix(field, n))));
    return {field, n, std::move(algebra), std::move(basis)};
}

// ---------------------------------------------------------------------------

namespace {

using Element = RationalAlgebra::Element;

Rational regular_trace(const RationalAlgebra& algebra, const Element& x) {
    const auto lx = left_multiplication(algebra, x);
    Rational tr = 0;
    for (std::size_t i = 0; i < algebra.dim(); ++i) tr += lx(i, i);
    return tr;
}

Element pure_part(const RationalAlgebra& algebra, const Element& x) {
    const Rational t = regular_trace(algebra, x) / Rational(static_cast<long>(algebra.dim()));
    return algebra.subtract(x, algebra.scale(t, algebra.unit()));
}

// Scalar c with x^2 = c * 1, if any.
std::optional<Rational> square_scalar(const RationalAlgebra& algebra, const Element& x) {
    const auto sq = algebra.multiply(x, x);
    const auto& unit = algebra.unit();
    std::size_t lead = 0;
    while (lead < unit.size() && unit[lead].is_zero()) ++lead;
    const Rational c = sq[lead] / unit[lead];
    if (sq != algebra.scale(c, unit)) return std::nullopt;
    return c;
}

// Small integer combinations of the family, coefficients in [-2, 2], in a
// fixed lexicographic order.
std::vector<Element> small_combinations(const RationalAlgebra& algebra, const std::vector<Element>& family) {
    std::vector<Element> out;
    const std::size_t k = family.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 5;
    for (std::size_t code = 0; code < total; ++code) {
        auto x = algebra.zero_element();
        std::size_t rest = code;
        for (std::size_t i = 0; i < k; ++i) {
            const long c = static_cast<long>(rest % 5) - 2;
            rest /= 5;
            if (c != 0) x = algebra.add(x, algebra.scale(Rational(c), family[i]));
        }
        if (!algebra.is_zero(x)) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace

std::optional<QuaternionMatch> match_quaternion(const RationalAlgebra& algebra, std::span<const Element> hints) {
    if (algebra.dim() != 4) return std::nullopt;

    // Trace-zero subspace.
    SpanBuilder<RationalField> pure_span(RationalField{}, 4);
    for (std::size_t k = 0; k < 4; ++k) pure_span.add(pure_part(algebra, algebra.basis_element(k)));
    if (pure_span.dim() != 3) return std::nullopt;

    std::vector<Element> u_candidates;
    for (const auto& h : hints) u_candidates.push_back(pure_part(algebra, h));
    for (std::size_t k = 0; k < 4; ++k) u_candidates.push_back(pure_part(algebra, algebra.basis_element(k)));
    for (auto& x : small_combinations(algebra, pure_span.members())) u_candidates.push_back(std::move(x));

    for (const auto& u : u_candidates) {
        if (algebra.is_zero(u)) continue;
        const auto a = square_scalar(algebra, u);
        if (!a || a->is_zero()) continue;

        // {x : ux + xu = 0}
        auto sys = zero_matrix(RationalField{}, 4, 4);
        for (std::size_t k = 0; k < 4; ++k) {
            const auto bk = algebra.basis_element(k);
            const auto anti = algebra.add(algebra.multiply(u, bk), algebra.multiply(bk, u));
            for (std::size_t r = 0; r < 4; ++r) sys(r, k) = anti[r];
        }
        const auto anti_basis = kernel_basis(RationalField{}, sys);
        if (anti_basis.size() != 2) continue;

        std::vector<Element> v_candidates;
        auto anticommutes = [&](const Element& x) {
            return algebra.is_zero(algebra.add(algebra.multiply(u, x), algebra.multiply(x, u)));
        };
        for (const auto& h : hints)
            if (anticommutes(h)) v_candidates.push_back(h);
        for (const auto& x : anti_basis) v_candidates.push_back(x);
        for (auto& x : small_combinations(algebra, anti_basis)) v_candidates.push_back(std::move(x));

        for (const auto& v : v_candidates) {
            if (algebra.is_zero(v)) continue;
            const auto b = square_scalar(algebra, v);
            if (!b || b->is_zero()) continue;
            std::array<Element, 4> basis{algebra.unit(), u, v, algebra.multiply(u, v)};
            SpanBuilder<RationalField> check(RationalField{}, 4);
            bool independent = true;
            for (const auto& x : basis) independent = independent && check.add(x);
            if (!independent) continue;
            const auto rebased = rebase(algebra, {basis.begin(), basis.end()}, {"1", "i", "j", "k"});
            if (rebased == quaternion_algebra(*a, *b).algebra()) return QuaternionMatch{*a, *b, basis};
        }
    }
    return std::nullopt;
}

TwistedRep twist_representation(const QuadRep& rep, const Cocycle& cocycle) {
    const auto moved = unfixed_generators(rep, cocycle);
    if (!moved.empty())
        fail("NotFixed", "generator '" + rep.presentation().generators()[moved.front()] +
                             "' is not fixed by the twisted Galois action");
    auto twisted = semilinear_fixed_algebra(cocycle);
    std::vector<Element> images;
    for (const auto& m : rep.images()) images.push_back(twisted.coordinates(m));
    AzuRep<RationalField> azu(rep.presentation(), twisted.algebra, images);
    auto match = match_quaternion(twisted.algebra, std::span<const Element>(images));
    return {std::move(twisted), std::move(azu), std::move(match)};
}

PreparedTwist prepare_twist(const QuadRep& rep, std::uint64_t seed) {
    if (!is_schur(rep)) fail("NotSchur", "representation has a commutant larger than the scalars");
    const auto translated = galois_translate(rep);
    const auto found = find_intertwiner(rep, translated, seed);
    if (found.status == IntertwinerStatus::provably_none)
        fail("NotGaloisStable", "the Galois conjugate representation is not isomorphic");
    if (found.status == IntertwinerStatus::budget_exhausted)
        throw BudgetExhausted("no invertible intertwiner to the Galois conjugate within the search budget");
    return {make_cocycle(rep.field(), *found.intertwiner), rep};
}

QuadMatrix effective_hilbert90(const QuadField& field, const QuadMatrix& s, std::uint64_t seed, std::size_t budget) {
    const std::size_t n = s.rows();
    if (!s.is_square() || s * conjugate_entries(s) != identity_matrix(field, n))
        fail("NotACocycle", "effective Hilbert 90 needs S*sigma(S) = I");
    std::mt19937_64 rng(seed);
    for (std::size_t attempt = 0; attempt < budget; ++attempt) {
        QuadMatrix m = identity_matrix(field, n);
        if (attempt > 0)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    const long a = small_integer(rng);
                    const long b = small_integer(rng);
                    m(r, c) = field.element(a, b);
                }
        auto p = m + s * conjugate_entries(m);
        if (is_invertible(field, p)) return p;
    }
    throw BudgetExhausted("no invertible M + S*sigma(M) found in " + std::to_string(budget) + " tries");
}

DescentResult descend_representation(const QuadRep& rep, const Cocycle& cocycle, const QuadElem& c,
                                     std::uint64_t seed) {
    if (quad_norm(c) != cocycle.lambda)
        fail("NormMismatch", "N(" + c.to_string() + ") = " + quad_norm(c).to_string() + " but lambda = " +
                                 cocycle.lambda.to_string());
    const auto moved = unfixed_generators(rep, cocycle);
    if (!moved.empty())
        fail("NotFixed", "generator '" + rep.presentation().generators()[moved.front()] +
                             "' is not fixed by the twisted Galois action");
    const auto& field = rep.field();
    const QuadMatrix normalized = cocycle.S * (field.one() / c);
    auto p = effective_hilbert90(field, normalized, seed);
    const auto p_inv = inverse_or_throw(field, p);
    std::vector<RationalMatrix> images;
    for (const auto& m : rep.images()) {
        auto descended = rational_part(p_inv * m * p);
        if (!descended) fail("InternalError", "descended image has irrational entries");
        images.push_back(std::move(*descended));
    }
    return {RationalRep(rep.presentation(), RationalField{}, rep.degree(), std::move(images)), std::move(p)};
}

namespace {

std::optional<QuadElem> bounded_norm_search(const QuadField& field, const Rational& lambda, std::int64_t bound) {
    const Rational d(field.d());
    for (std::int64_t q = 1; q <= bound; ++q) {
        const Rational base = lambda * Rational(q) * Rational(q);
        for (std::int64_t y = 0; y <= bound; ++y) {
            const Rational t = base + d * Rational(y) * Rational(y);
            if (t.sign() < 0 || t.denominator() != 1) continue;
            if (mpz_perfect_square_p(t.numerator().get_mpz_t()) == 0) continue;
            mpz_class x;
            mpz_sqrt(x.get_mpz_t(), t.numerator().get_mpz_t());
            if (x > bound) continue;
            return field.element(Rational(x, q), Rational(y, q));
        }
    }
    return std::nullopt;
}

/// Tonelli-Shanks. nullopt when a is a non-residue.
std::optional<mpz_class> sqrt_mod_prime(const mpz_class& a_in, const mpz_class& p) {
    mpz_class a = a_in % p;
    if (a < 0) a += p;
    if (a == 0) return mpz_class(0);
    if (p == 2) return a;
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    mpz_class z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    mpz_class c, t, r, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        mpz_class tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        mpz_class b = c;
        for (unsigned long k = 0; k + i + 1 < m; ++k) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

/// r with r^2 = d mod |k| for squarefree k, combined prime by prime.
std::optional<mpz_class> sqrt_mod_squarefree(const mpz_class& d, const mpz_class& k, std::uint64_t factor_bound) {
    mpz_class modulus = 1;
    mpz_class r = 0;
    for (const auto& [p, e] : factor_integer(abs(k), factor_bound)) {
        const auto rp = sqrt_mod_prime(d, p);
        if (!rp) return std::nullopt;
        // CRT: r' = r mod modulus, r' = rp mod p.
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
        mpz_class step = ((*rp - r) % p) * inv % p;
        if (step < 0) step += p;
        r += modulus * step;
        modulus *= p;
    }
    return r;
}

}  // namespace

std::optional<QuadElem> norm_solve(const QuadField& field, const Rational& lambda, std::int64_t bound,
                                   std::uint64_t factor_bound) {
    if (lambda.is_zero()) return field.zero();
    // Lagrange reduction: with r^2 = d mod k, N(r + sqrt d) = k k', so k and
    // k' = (r^2 - d)/k differ by a norm and |k'| < |k| once |k| > |d|.
    const mpz_class d(static_cast<long>(field.d()));
    auto cls = square_class(lambda, factor_bound);
    QuadElem acc = field.from_rational(cls.scale);
    mpz_class k = cls.kernel;
    while (abs(k) > abs(d)) {
        const auto root = sqrt_mod_squarefree(d, k, factor_bound);
        if (!root) return std::nullopt;
        const mpz_class m = abs(k);
        mpz_class r = *root % m;
        if (2 * r > m) r -= m;
        const mpz_class next = (r * r - d) / k;
        acc = acc * field.element(Rational(r, mpz_class(1)), Rational(1)) / field.from_rational(Rational(next, mpz_class(1)));
        cls = square_class(Rational(next, mpz_class(1)), factor_bound);
        acc = acc * field.from_rational(cls.scale);
        k = cls.kernel;
    }
    const auto small = bounded_norm_search(field, Rational(k, mpz_class(1)), bound);
    if (!small) return std::nullopt;
    return acc * *small;
}

}  // namespace schurforge
