#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "support.hpp"

using namespace sf_test;

namespace {

const RationalField Q{};

std::vector<long> squarefree_upto(long bound) {
    std::vector<long> out;
    for (long x = -bound; x <= bound; ++x) {
        if (x == 0) continue;
        bool ok = true;
        for (long p = 2; p * p <= std::abs(x); ++p)
            if (std::abs(x) % (p * p) == 0) ok = false;
        if (ok) out.push_back(x);
    }
    return out;
}

std::set<std::string> ramified(const Rational& a, const Rational& b) {
    std::set<std::string> out;
    for (const auto& s : ramified_places(a, b)) {
        CHECK(s.symbol == -1);
        out.insert(s.place.to_string());
    }
    return out;
}

const Place& infinity() {
    static const Place inf = Place::infinity();
    return inf;
}

QuadMatrix rot(const QuadField& L) { return lmat(L, {{{0}, {1}}, {{-1}, {0}}}); }

}  // namespace

TEST_CASE("hilbert_symbol examples") {
    CHECK(hilbert_symbol(-1, -1, infinity()) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::prime(2)) == -1);
    CHECK(hilbert_symbol(2, 3, Place::prime(3)) == -1);
    for (long p : {3, 5, 7, 11, 13}) CHECK(hilbert_symbol(-1, -1, Place::prime(p)) == 1);
    CHECK(hilbert_symbol(q("-1/4"), q("-9/25"), infinity()) == -1);
    CHECK(hilbert_symbol(q("8/9"), 3, Place::prime(3)) == -1);
    CHECK(error_name([] { (void)hilbert_symbol(0, 3, infinity()); }) == "ZeroInput");
    CHECK(error_name([] { (void)hilbert_symbol(3, 0, Place::prime(5)); }) == "ZeroInput");
    CHECK(error_name([] { (void)Place::prime(9); }) == "InvalidPrime");
    CHECK(error_name([] { (void)Place::prime(1); }) == "InvalidPrime");
}

TEST_CASE("ramified_places examples") {
    CHECK(ramified(-1, -1) == std::set<std::string>{"inf", "2"});
    for (long b : {-7, -1, 2, 3, 30}) CHECK(ramified(1, b).empty());
    // Frozen from the local isotropy oracle: (-1,3) is ramified at 2 and 3.
    CHECK(oracle::local_hilbert(-1, 3, 2) == -1);
    CHECK(oracle::local_hilbert(-1, 3, 3) == -1);
    CHECK(oracle::local_hilbert(-1, 3, 5) == 1);
    CHECK(ramified(-1, 3) == std::set<std::string>{"2", "3"});
    CHECK(ramified(q("-4/9"), q("12/1")) == std::set<std::string>{"2", "3"});
}

TEST_CASE("is_split examples") {
    CHECK(is_split(1, 1));
    CHECK_FALSE(is_split(-1, -1));
    // (2,7): 7 = 3^2 - 2*1^2, so 7 is a norm from Q(sqrt 2).
    CHECK(is_split(2, 7));
    CHECK(oracle::quaternion_zero_divisor(2, 7));
    CHECK_FALSE(is_split(-1, 3));
    CHECK(is_split(-1, 2));
    CHECK(is_split(5, -1));
}

TEST_CASE("quaternion_class reduces to squarefree representatives") {
    const auto c = quaternion_class(q("-8/9"), q("75/4"));
    CHECK(c.a == -2);
    CHECK(c.b == 3);
    CHECK(error_name([] { (void)quaternion_class(0, 2); }) == "ZeroInput");
}

TEST_CASE("local symbols agree with the Hensel isotropy oracle") {
    const auto small = squarefree_upto(15);
    for (long p : {2, 3, 5, 7}) {
        const long range = p == 7 ? 10 : 15;
        for (long a : small)
            for (long b : small) {
                if (std::abs(a) > range || std::abs(b) > range) continue;
                CHECK_MESSAGE(hilbert_symbol(a, b, Place::prime(p)) == oracle::local_hilbert(a, b, p),
                              "(" << a << "," << b << ")_" << p);
            }
    }
    for (long a : small)
        for (long b : small) CHECK(hilbert_symbol(a, b, infinity()) == ((a < 0 && b < 0) ? -1 : 1));
}

TEST_CASE("Hilbert reciprocity for squarefree |a|, |b| <= 30") {
    const auto values = squarefree_upto(30);
    std::size_t pairs = 0;
    for (long a : values)
        for (long b : values) {
            int product = 1;
            const auto symbols = all_symbols(a, b);
            for (const auto& s : symbols) product *= s.symbol;
            CHECK_MESSAGE(product == 1, "(" << a << "," << b << ")");
            CHECK(ramified(a, b).size() % 2 == 0);
            // Odd primes not dividing ab never ramify.
            for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
                if ((a * b) % p != 0) CHECK(hilbert_symbol(a, b, Place::prime(p)) == 1);
            ++pairs;
        }
    CHECK(pairs == values.size() * values.size());
}

TEST_CASE("symmetry, bilinearity and Steinberg relations") {
    const auto values = squarefree_upto(12);
    std::vector<Place> places{Place::infinity()};
    for (long p : {2, 3, 5, 7, 11}) places.push_back(Place::prime(p));
    for (const auto& v : places)
        for (long a : values) {
            for (long b : values) {
                CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
                for (long c : {-3, -1, 2, 5, 6})
                    CHECK(hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
            }
            CHECK(hilbert_symbol(a, -a, v) == 1);
            if (a != 1) CHECK(hilbert_symbol(a, 1 - a, v) == 1);
        }
    for (const char* x : {"1/2", "-3/4", "5/3", "7/9", "-2/5"}) {
        const auto a = q(x);
        for (const auto& v : places) {
            CHECK(hilbert_symbol(a, -a, v) == 1);
            CHECK(hilbert_symbol(a, Rational(1) - a, v) == 1);
        }
    }
}

TEST_CASE("geometric_origin_report: quaternionic pair") {
    const auto report = geometric_origin_report(quaternionic_pair());
    CHECK_FALSE(report.origin);
    CHECK(report.schur);
    CHECK(report.quaternion_class == QuaternionClass{-1, -1});
    CHECK(report.lambda == report.cocycle.lambda);
    REQUIRE(std::holds_alternative<TwistedRep>(report.witness));
    const auto& tw = std::get<TwistedRep>(report.witness);
    REQUIRE(tw.quaternion.has_value());
    CHECK(tw.quaternion->a == Rational(-1));
    CHECK(tw.quaternion->b == Rational(-1));
    const std::vector<RationalAlgebra::Element> basis(tw.quaternion->basis.begin(), tw.quaternion->basis.end());
    const CoordinateSolver<RationalField> solver(Q, 4, basis);
    CHECK(solver.solve(tw.rep.images()[0]) == std::vector<Rational>{0, 1, 0, 0});
    CHECK(solver.solve(tw.rep.images()[1]) == std::vector<Rational>{0, 0, 1, 0});
    CHECK(is_schur_azu(tw.rep));
}

TEST_CASE("geometric_origin_report: single diag(i, -i)") {
    const auto L = gaussian();
    const auto t = rep_of(L, {lmat(L, {{{0, 1}, {0}}, {{0}, {0, -1}}})});
    const auto report = geometric_origin_report(t);
    CHECK(report.origin);
    CHECK_FALSE(report.schur);
    CHECK(is_split(-1, report.lambda));
    REQUIRE(std::holds_alternative<DescentResult>(report.witness));
    const auto& down = std::get<DescentResult>(report.witness);
    const auto& m = down.rep.images().front();
    CHECK(m * m == identity_matrix(Q, 2) * Rational(-1));
    CHECK(are_isomorphic(down.rep, rep_of(Q, {qmat({{"0", "-1"}, {"1", "0"}})})));
}

TEST_CASE("geometric_origin_report: representations defined over Q") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (std::int64_t d : {-1, 2, -3, 5, -7}) {
        const QuadField L(d);
        for (int trial = 0; checked < 40 && trial < 20; ++trial) {
            const auto rep = random_rep(Q, 2 + rng() % 2, 2, rng);
            if (!is_schur(rep)) continue;
            const auto report = geometric_origin_report(base_change(rep, L), rng());
            CHECK(report.origin);
            REQUIRE(std::holds_alternative<DescentResult>(report.witness));
            const auto& down = std::get<DescentResult>(report.witness);
            CHECK(are_isomorphic(down.rep, rep));
            CHECK(conjugate_rep(base_change(rep, L), *inverse(L, down.P)).images() ==
                  base_change(down.rep, L).images());
            ++checked;
        }
    }
    CHECK(checked >= 25);
}

TEST_CASE("geometric_origin_report: twisted quaternionic families") {
    // Fixed points of x -> S sigma(x) S^-1 for S = A [[0,1],[mu,0]] sigma(A)^-1 are defined over the
    // quaternion algebra (d, mu); origin holds exactly when that algebra splits.
    std::mt19937_64 rng(9);
    int nonsplit = 0;
    int split = 0;
    for (std::int64_t d : {-1, -2, 3, 5}) {
        const QuadField L(d);
        for (long mu : {-1, 2, 3, -5, 7}) {
            const auto S0 = lmat(L, {{{0}, {1}}, {{mu}, {0}}});
            const auto A = random_invertible(L, 2, rng);
            const auto S = A * S0 * *inverse(L, conjugate_entries(A));
            const auto Sinv = *inverse(L, S);
            std::vector<QuadMatrix> images;
            for (int g = 0; g < 2; ++g) {
                const auto x = random_matrix(L, 2, 2, rng);
                images.push_back(x + S * conjugate_entries(x) * Sinv);
            }
            const auto rep = rep_of(L, std::move(images));
            if (!is_schur(rep)) continue;
            const auto report = geometric_origin_report(rep, rng());
            CHECK(report.origin == is_split(d, mu));
            CHECK(ramified(d, report.lambda) == ramified(d, mu));
            if (report.origin) {
                ++split;
                const auto& down = std::get<DescentResult>(report.witness);
                CHECK(are_isomorphic(base_change(down.rep, L), rep));
            } else {
                ++nonsplit;
                const auto& tw = std::get<TwistedRep>(report.witness);
                CHECK(is_schur_azu(tw.rep));
                REQUIRE(tw.quaternion.has_value());
                CHECK(ramified(tw.quaternion->a, tw.quaternion->b) == ramified(d, mu));
                for (std::size_t g = 0; g < 2; ++g) CHECK(tw.twisted.embed(tw.rep.images()[g]) == rep.images()[g]);
            }
        }
    }
    CHECK(nonsplit >= 4);
    CHECK(split >= 4);
}

TEST_CASE("geometric_origin_report errors") {
    const auto L = gaussian();
    const auto unstable = rep_of(L, {lmat(L, {{{0, 1}, {0}}, {{0}, {0, 2}}}), lmat(L, {{{1}, {1}}, {{1}, {0}}})});
    CHECK(error_name([&] { (void)geometric_origin_report(unstable); }) == "NotGaloisStable");
    const auto unit = rep_of(L, {identity_matrix(L, 2)});
    CHECK(error_name([&] { (void)geometric_origin_report(rep_of(L, {lmat(L, {{{0, 1}, {0}}, {{0}, {0, 2}}})})); }) ==
          "NotGaloisStable");
    SearchBounds none;
    none.norm_search = 0;
    CHECK(error_name([&] { (void)geometric_origin_report(base_change(diag_swap(), L), 0, none); }) == "BudgetExhausted");
    CHECK(error_name([&] { (void)geometric_origin_report(quaternionic_pair(), 0, none); }).empty());
    CHECK(geometric_origin_report(unit).origin);
}

TEST_CASE("quadratic_origin_demo examples") {
    using enum DemoMode;
    CHECK(quadratic_origin_demo(3, real_sign));
    CHECK(quadratic_origin_demo(-3, real_sign));
    CHECK(quadratic_origin_demo(q("5/2"), real_sign));
    CHECK_FALSE(quadratic_origin_demo(1, real_sign));
    CHECK_FALSE(quadratic_origin_demo(0, real_sign));
    CHECK_FALSE(quadratic_origin_demo(q("-3/2"), real_sign));
    CHECK(quadratic_origin_demo(q("5/2"), rational_square));
    CHECK_FALSE(quadratic_origin_demo(3, rational_square));
    CHECK(quadratic_origin_demo(q("-17/4"), rational_square));
    CHECK(error_name([] { (void)quadratic_origin_demo(2, real_sign); }) == "DegenerateDiscriminant");
    CHECK(error_name([] { (void)quadratic_origin_demo(-2, rational_square); }) == "DegenerateDiscriminant");
    // |lambda| > 2 exactly, checked on a rational grid.
    for (long num = -40; num <= 40; ++num) {
        const Rational lambda(mpz_class(num), mpz_class(8));
        if (lambda.abs() == Rational(2)) continue;
        CHECK(quadratic_origin_demo(lambda, real_sign) == (lambda.abs() > Rational(2)));
    }
}
