#pragma once

// Exact scalars: rationals, quadratic fields Q(sqrt d) and prime fields F_p.
//
// Every field type F used by the generic linear algebra exposes
//   F::value_type, zero(), one(), from_int(long), from_rational(const Rational&)
// and its elements provide + - * / unary -, == and is_zero().

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schurforge/error.hpp"

namespace schurforge {

inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000;

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "p", "p/q" or "-p/q". Whitespace is not accepted.
    static Rational parse(std::string_view text);

    std::string to_string() const;

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    Rational inverse() const;
    Rational abs() const { return Rational(::abs(value_)); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

// ---------------------------------------------------------------------------
// Integer helpers

/// Prime factorization of |n| (n != 0) by trial division up to `bound`.
/// Throws FactorizationTooLarge when a cofactor cannot be certified prime.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n,
                                                           std::uint64_t bound = kDefaultFactorBound);

bool is_prime(const mpz_class& n);

/// x = scale^2 * kernel with kernel a squarefree integer (sign included).
struct SquareClass {
    mpz_class kernel;
    Rational scale;
};

/// Throws ZeroInput for x = 0.
SquareClass square_class(const Rational& x, std::uint64_t bound = kDefaultFactorBound);

bool is_squarefree(const mpz_class& n, std::uint64_t bound = kDefaultFactorBound);

bool is_square_rational(const Rational& x, std::uint64_t bound = kDefaultFactorBound);

/// Euler's criterion. Throws InvalidPrime unless p is an odd prime.
int legendre_symbol(const mpz_class& a, const mpz_class& p);

// ---------------------------------------------------------------------------
// Q

struct RationalField {
    using value_type = Rational;

    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational from_int(long v) const { return Rational(v); }
    Rational from_rational(const Rational& q) const { return q; }
    std::string name() const { return "Q"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

// ---------------------------------------------------------------------------
// Q(sqrt d)

class QuadElem {
public:
    QuadElem(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    std::int64_t d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    std::string to_string() const;

    QuadElem operator-() const { return {-a_, -b_, d_}; }
    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);
    QuadElem& operator/=(const QuadElem& o);

    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.to_string(); }

private:
    void require_same_field(const QuadElem& o) const;

    Rational a_;
    Rational b_;
    std::int64_t d_;
};

/// sigma(a + b sqrt d) = a - b sqrt d.
QuadElem quad_conjugate(const QuadElem& x);

/// a^2 - d b^2.
Rational quad_norm(const QuadElem& x);

class QuadField {
public:
    using value_type = QuadElem;

    /// Throws InvalidField unless d is a squarefree integer other than 0 and 1.
    explicit QuadField(std::int64_t d, std::uint64_t factor_bound = kDefaultFactorBound);

    std::int64_t d() const { return d_; }

    QuadElem zero() const { return {0, 0, d_}; }
    QuadElem one() const { return {1, 0, d_}; }
    QuadElem from_int(long v) const { return {v, 0, d_}; }
    QuadElem from_rational(const Rational& q) const { return {q, 0, d_}; }
    QuadElem element(const Rational& a, const Rational& b) const { return {a, b, d_}; }
    QuadElem sqrt_d() const { return {0, 1, d_}; }
    std::string name() const { return "Q(sqrt(" + std::to_string(d_) + "))"; }

    friend bool operator==(const QuadField& x, const QuadField& y) { return x.d_ == y.d_; }

private:
    std::int64_t d_;
};

// ---------------------------------------------------------------------------
// F_p

class PrimeFieldElem {
public:
    PrimeFieldElem(std::uint32_t value, std::uint32_t p) : value_(value % p), p_(p) {}

    std::uint32_t value() const { return value_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return value_ == 0; }
    PrimeFieldElem inverse() const;
    std::string to_string() const { return std::to_string(value_); }

    PrimeFieldElem operator-() const { return {value_ == 0 ? 0 : p_ - value_, p_}; }
    PrimeFieldElem& operator+=(const PrimeFieldElem& o);
    PrimeFieldElem& operator-=(const PrimeFieldElem& o);
    PrimeFieldElem& operator*=(const PrimeFieldElem& o);
    PrimeFieldElem& operator/=(const PrimeFieldElem& o) { return *this *= o.inverse(); }

    friend PrimeFieldElem operator+(PrimeFieldElem x, const PrimeFieldElem& y) { return x += y; }
    friend PrimeFieldElem operator-(PrimeFieldElem x, const PrimeFieldElem& y) { return x -= y; }
    friend PrimeFieldElem operator*(PrimeFieldElem x, const PrimeFieldElem& y) { return x *= y; }
    friend PrimeFieldElem operator/(PrimeFieldElem x, const PrimeFieldElem& y) { return x /= y; }

    friend bool operator==(const PrimeFieldElem& x, const PrimeFieldElem& y) {
        return x.p_ == y.p_ && x.value_ == y.value_;
    }
    friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElem& x) { return os << x.value_; }

private:
    void require_same_field(const PrimeFieldElem& o) const;

    std::uint32_t value_;
    std::uint32_t p_;
};

class PrimeField {
public:
    using value_type = PrimeFieldElem;

    /// Throws InvalidPrime unless p is a prime below 2^31.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    PrimeFieldElem zero() const { return {0, p_}; }
    PrimeFieldElem one() const { return {1, p_}; }
    PrimeFieldElem from_int(long v) const;
    /// Throws NotInField when the denominator vanishes mod p.
    PrimeFieldElem from_rational(const Rational& q) const;
    std::string name() const { return "F_" + std::to_string(p_); }

    friend bool operator==(const PrimeField& x, const PrimeField& y) { return x.p_ == y.p_; }

private:
    std::uint32_t p_;
};

template <class F>
concept ExactField = requires(const F& field, const typename F::value_type& x, const Rational& q) {
    typename F::value_type;
    { field.zero() } -> std::same_as<typename F::value_type>;
    { field.one() } -> std::same_as<typename F::value_type>;
    { field.from_int(1L) } -> std::same_as<typename F::value_type>;
    { field.from_rational(q) } -> std::same_as<typename F::value_type>;
    { x.is_zero() } -> std::convertible_to<bool>;
    { x + x } -> std::same_as<typename F::value_type>;
    { x - x } -> std::same_as<typename F::value_type>;
    { x * x } -> std::same_as<typename F::value_type>;
    { x / x } -> std::same_as<typename F::value_type>;
    { -x } -> std::same_as<typename F::value_type>;
    { x == x } -> std::convertible_to<bool>;
};

static_assert(ExactField<RationalField>);
static_assert(ExactField<QuadField>);
static_assert(ExactField<PrimeField>);

inline std::string to_string(const Rational& x) { return x.to_string(); }
inline std::string to_string(const QuadElem& x) { return x.to_string(); }
inline std::string to_string(const PrimeFieldElem& x) { return x.to_string(); }

}  // namespace schurforge
