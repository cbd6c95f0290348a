#include "schurforge/azumaya.hpp"

namespace schurforge {

namespace {

// Products of basis elements 1, i, j, k as coefficient/index pairs.
struct BasisProduct {
    int index;
    Rational coeff;
};

BasisProduct quaternion_basis_product(std::size_t x, std::size_t y, const Rational& a, const Rational& b) {
    // Rows: 1, i, j, k on the left; columns on the right.
    switch (x * 4 + y) {
        case 0: return {0, 1};
        case 1: return {1, 1};
        case 2: return {2, 1};
        case 3: return {3, 1};
        case 4: return {1, 1};      // i*1
        case 5: return {0, a};      // i*i
        case 6: return {3, 1};      // i*j
        case 7: return {2, a};      // i*k = a j
        case 8: return {2, 1};      // j*1
        case 9: return {3, -1};     // j*i = -k
        case 10: return {0, b};     // j*j
        case 11: return {1, -b};    // j*k = -b i
        case 12: return {3, 1};     // k*1
        case 13: return {2, -a};    // k*i = -a j
        case 14: return {1, b};     // k*j = b i
        default: return {0, -(a * b)};  // k*k
    }
}

}  // namespace

QuaternionAlgebra quaternion_algebra(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) fail("ZeroParameter", "quaternion parameters must be nonzero");
    std::vector<Rational> constants(64, Rational(0));
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y) {
            const auto p = quaternion_basis_product(x, y, a, b);
            constants[(x * 4 + y) * 4 + static_cast<std::size_t>(p.index)] = p.coeff;
        }
    RationalAlgebra algebra(RationalField{}, {"1", "i", "j", "k"}, std::move(constants), {1, 0, 0, 0});
    return QuaternionAlgebra(a, b, std::move(algebra));
}

Quaternion QuaternionAlgebra::multiply(const Quaternion& x, const Quaternion& y) const {
    const auto out = algebra_.multiply(element(x), element(y));
    return {out[0], out[1], out[2], out[3]};
}

Rational reduced_norm(const QuaternionAlgebra& h, const Quaternion& x) {
    const auto& a = h.a();
    const auto& b = h.b();
    return x[0] * x[0] - a * x[1] * x[1] - b * x[2] * x[2] + a * b * x[3] * x[3];
}

Quaternion quaternion_conjugate(const Quaternion& x) { return {x[0], -x[1], -x[2], -x[3]}; }

Quaternion quaternion_inverse(const QuaternionAlgebra& h, const Quaternion& x) {
    const auto n = reduced_norm(h, x);
    if (n.is_zero()) fail("Singular", "quaternion with zero reduced norm is a zero divisor");
    auto out = quaternion_conjugate(x);
    for (auto& c : out) c /= n;
    return out;
}

namespace {

template <ExactField F>
MatrixOver<F> combine(const F& field, const std::array<MatrixOver<F>, 4>& images, const Quaternion& x) {
    auto out = zero_matrix(field, 2, 2);
    for (std::size_t t = 0; t < 4; ++t) out += images[t] * field.from_rational(x[t]);
    return out;
}

}  // namespace

Matrix<QuadElem> SplitEmbedding::apply(const Quaternion& x) const { return combine(field, images, x); }

Matrix<Rational> RationalSplitEmbedding::apply(const Quaternion& x) const { return combine(RationalField{}, images, x); }

SplitEmbedding split_embedding(const QuaternionAlgebra& h, std::uint64_t factor_bound) {
    const auto cls = square_class(h.a(), factor_bound);
    if (cls.kernel == 1)
        fail("SquareParameter", "a = " + h.a().to_string() + " is a square in Q; use the rational splitting");
    const QuadField field(cls.kernel.get_si(), factor_bound);
    const QuadElem root = field.element(0, cls.scale);
    const QuadElem b = field.from_rational(h.b());
    auto diag = zero_matrix(field, 2, 2);
    diag(0, 0) = root;
    diag(1, 1) = -root;
    auto jm = zero_matrix(field, 2, 2);
    jm(0, 1) = b;
    jm(1, 0) = field.one();
    SplitEmbedding out{field, root, {identity_matrix(field, 2), diag, jm, diag * jm}};
    return out;
}

RationalSplitEmbedding rational_split_embedding(const QuaternionAlgebra& h, std::uint64_t factor_bound) {
    const auto cls = square_class(h.a(), factor_bound);
    if (cls.kernel != 1)
        fail("NonSquareParameter", "a = " + h.a().to_string() + " is not a square in Q");
    const RationalField field;
    const Rational& root = cls.scale;
    auto diag = zero_matrix(field, 2, 2);
    diag(0, 0) = root;
    diag(1, 1) = -root;
    auto jm = zero_matrix(field, 2, 2);
    jm(0, 1) = h.b();
    jm(1, 0) = 1;
    return {root, {identity_matrix(field, 2), diag, jm, diag * jm}};
}

}  // namespace schurforge
