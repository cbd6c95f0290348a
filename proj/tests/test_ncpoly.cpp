#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace sf_test;

namespace {

const RationalField Q{};
const MatrixAmbient<RationalField> mat2{Q, 2};

NcPoly gen(std::size_t i) { return NcPoly::generator(i); }

std::set<std::string> relation_strings(const FreePresentation& p) {
    std::set<std::string> out;
    for (std::size_t i = 0; i < p.relations().size(); ++i) out.insert(p.relation_string(i));
    return out;
}

NcPoly random_poly(std::mt19937_64& rng, std::size_t generators) {
    std::vector<Term> terms;
    const std::size_t count = 1 + rng() % 4;
    for (std::size_t t = 0; t < count; ++t) {
        Word w;
        const std::size_t len = rng() % 4;
        for (std::size_t k = 0; k < len; ++k) w.push_back(rng() % generators);
        terms.push_back({random_rational(rng), std::move(w)});
    }
    return NcPoly(std::move(terms));
}

}  // namespace

TEST_CASE("canonical form merges words and drops zeros") {
    const NcPoly p({{2, {0, 1}}, {3, {}}, {-2, {0, 1}}, {1, {1}}, {0, {0}}, {q("1/2"), {1}}});
    REQUIRE(p.terms().size() == 2);
    CHECK(p.terms()[0] == Term{3, {}});
    CHECK(p.terms()[1] == Term{q("3/2"), {1}});
    CHECK((gen(0) - gen(0)).is_zero());
    CHECK((gen(0) * gen(1)).terms().front().word == Word{0, 1});
    CHECK(p.generator_bound() == 2);
    CHECK(NcPoly::constant(5).generator_bound() == 0);
}

TEST_CASE("eval_poly examples") {
    const std::vector<RationalMatrix> ident{identity_matrix(Q, 2), identity_matrix(Q, 2)};
    CHECK(eval_poly(mat2, gen(0) * gen(1) - gen(1) * gen(0), std::span(ident)).is_zero());

    const std::vector<RationalMatrix> swap{qmat({{"0", "1"}, {"1", "0"}})};
    CHECK(eval_poly(mat2, gen(0) * gen(0) - NcPoly::constant(1), std::span(swap)).is_zero());

    const std::vector<RationalMatrix> none;
    CHECK(error_name([&] { (void)eval_poly(mat2, gen(0), std::span(none)); }) == "UnboundGenerator");

    const std::vector<RationalMatrix> wrong{identity_matrix(Q, 3)};
    CHECK(error_name([&] { (void)eval_poly(mat2, gen(0), std::span(wrong)); }) == "DimensionMismatch");

    // The empty word is the identity.
    CHECK(eval_poly(mat2, NcPoly::constant(3), std::span(none)) == identity_matrix(Q, 2) * Rational(3));
}

TEST_CASE("eval_poly is linear and multiplicative on words") {
    std::mt19937_64 rng(3);
    const MatrixAmbient<RationalField> mat3{Q, 3};
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<RationalMatrix> values{random_matrix(Q, 3, 3, rng), random_matrix(Q, 3, 3, rng)};
        const auto p = random_poly(rng, 2);
        const auto r = random_poly(rng, 2);
        const auto c = random_rational(rng);
        const auto vp = eval_poly(mat3, p, std::span(values));
        const auto vr = eval_poly(mat3, r, std::span(values));
        CHECK(eval_poly(mat3, p + r, std::span(values)) == vp + vr);
        CHECK(eval_poly(mat3, c * p, std::span(values)) == vp * c);
        CHECK(eval_poly(mat3, p * r, std::span(values)) == vp * vr);
    }
}

TEST_CASE("eval_poly in a structure-constant algebra") {
    const auto h = quaternion_algebra(-1, -1);
    const AlgebraAmbient<RationalField> amb{&h.algebra()};
    const std::vector<RationalAlgebra::Element> ij{h.element({0, 1, 0, 0}), h.element({0, 0, 1, 0})};
    CHECK(eval_poly(amb, gen(0) * gen(1) + gen(1) * gen(0), std::span(ij)) == h.algebra().zero_element());
    CHECK(eval_poly(amb, gen(0) * gen(0), std::span(ij)) == h.element({-1, 0, 0, 0}));
    const std::vector<RationalAlgebra::Element> bad{RationalAlgebra::Element(3, Rational(0))};
    CHECK(error_name([&] { (void)eval_poly(amb, gen(0), std::span(bad)); }) == "DimensionMismatch");
}

TEST_CASE("check_relations examples") {
    const FreePresentation dual({"t"}, {gen(0) * gen(0)});
    const std::vector<RationalMatrix> j{jordan2()};
    const std::vector<RationalMatrix> i2{identity_matrix(Q, 2)};
    CHECK(check_relations(mat2, dual, std::span(j)));
    CHECK_FALSE(check_relations(mat2, dual, std::span(i2)));
    const std::vector<RationalMatrix> any{jordan2(), identity_matrix(Q, 2)};
    CHECK(check_relations(mat2, free_on(2), std::span(any)));
}

TEST_CASE("presentation validation") {
    CHECK(error_name([] { FreePresentation({"x", "x"}, {}); }) == "DuplicateGenerator");
    CHECK(error_name([] { FreePresentation({"x"}, {NcPoly::generator(1)}); }) == "UnknownGenerator");
    CHECK(error_name([] { FreePresentation({""}, {}); }) == "InvalidGenerator");
    const FreePresentation p({"x", "y"}, {gen(0) * gen(1) - gen(1) * gen(0) + NcPoly::constant(q("-1/2"))});
    CHECK(p.generator_index("y") == 1u);
    CHECK_FALSE(p.generator_index("z").has_value());
    CHECK(p.relation_string(0) == "x*y - y*x - 1/2");
}

TEST_CASE("path algebra of A2") {
    const Quiver a2(2, {{0, 1}});
    const auto p = path_algebra(a2);
    CHECK(p.generators() == std::vector<std::string>{"e0", "e1", "f0"});
    const std::set<std::string> expected{"e0*e0 - e0", "e1*e1 - e1", "e0*e1", "e1*e0", "f0*e0 - f0",
                                         "e1*f0 - f0", "f0*e1",      "e0*f0", "e0 + e1 - 1"};
    CHECK(relation_strings(p) == expected);
    CHECK(p.relations().size() == 9);

    const std::vector<RationalMatrix> rho{qmat({{"1", "0"}, {"0", "0"}}), qmat({{"0", "0"}, {"0", "1"}}),
                                          qmat({{"0", "0"}, {"1", "0"}})};
    CHECK(check_relations(mat2, p, std::span(rho)));
    // Sum of the vertex images is the identity for any valid assignment.
    CHECK(rho[0] + rho[1] == identity_matrix(Q, 2));
    const std::vector<RationalMatrix> backwards{rho[0], rho[1], qmat({{"0", "1"}, {"0", "0"}})};
    CHECK_FALSE(check_relations(mat2, p, std::span(backwards)));
}

TEST_CASE("one vertex with a loop recovers the free algebra") {
    const Quiver loop(1, {{0, 0}});
    const auto p = path_algebra(loop);
    CHECK(p.generator_count() == 2);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<RationalMatrix> rho{identity_matrix(Q, 2), random_matrix(Q, 2, 2, rng)};
        CHECK(check_relations(mat2, p, std::span(rho)));
    }
    const std::vector<RationalMatrix> not_unit{qmat({{"1", "0"}, {"0", "0"}}), jordan2()};
    CHECK_FALSE(check_relations(mat2, p, std::span(not_unit)));
    const std::vector<RationalMatrix> zero_e{zero_matrix(Q, 2, 2), jordan2()};
    CHECK_FALSE(check_relations(mat2, p, std::span(zero_e)));
}

TEST_CASE("two isolated vertices give K x K") {
    const Quiver two(2, {});
    const auto p = path_algebra(two);
    const std::vector<RationalMatrix> rho{qmat({{"1", "0"}, {"0", "0"}}), qmat({{"0", "0"}, {"0", "1"}})};
    REQUIRE(check_relations(mat2, p, std::span(rho)));
    // The image is a 2-dimensional commutative algebra with two orthogonal idempotents.
    CHECK(image_span_basis(Q, 2, std::span(rho)).size() == 2);
    const auto kk = algebra_from_matrix_basis(Q, rho);
    CHECK(kk.dim() == 2);
    CHECK(center_dim(kk) == 2);
    // Its 2-dimensional regular representation is again a valid assignment.
    const auto reg = regular_representation(kk);
    CHECK(check_relations(mat2, p, std::span(reg)));
}

TEST_CASE("quiver validation") {
    CHECK(error_name([] { Quiver(0, {}); }) == "EmptyQuiver");
    CHECK(error_name([] { Quiver(2, {{0, 2}}); }) == "InvalidQuiver");
    CHECK(error_name([] { (void)path_algebra(Quiver()); }) == "EmptyQuiver");
    const Quiver multi(1, {{0, 0}, {0, 0}});
    CHECK(path_algebra(multi).generator_count() == 3);
}
