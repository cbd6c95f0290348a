#include "schurforge/exactfield.hpp"

#include <cctype>

namespace schurforge {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) fail("DivisionByZero", "rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        fail("InvalidScalar", "not a rational literal: '" + std::string(text) + "'");
    std::string num_s(num);
    if (num_s[0] == '+') num_s.erase(0, 1);
    const mpz_class d(std::string(den), 10);
    if (d == 0) fail("DivisionByZero", "zero denominator in '" + std::string(text) + "'");
    return Rational(mpz_class(num_s, 10), d);
}

std::string Rational::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) fail("DivisionByZero", "division by zero");
    value_ /= o.value_;
    return *this;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n, std::uint64_t bound) {
    if (n == 0) fail("ZeroInput", "cannot factor zero");
    mpz_class rest = ::abs(n);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) factors.emplace_back(mpz_class(p), e);
    };
    strip(2);
    unsigned long p = 3;
    for (; p <= bound; p += 2) {
        if (mpz_class(p) * p > rest) break;
        strip(p);
    }
    if (rest > 1) {
        if (mpz_class(p) * p <= rest)
            fail("FactorizationTooLarge", "cofactor " + rest.get_str() + " has no factor below trial-division bound " +
                                              std::to_string(bound));
        factors.emplace_back(rest, 1);
    }
    return factors;
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

SquareClass square_class(const Rational& x, std::uint64_t bound) {
    if (x.is_zero()) fail("ZeroInput", "square class of zero");
    mpz_class kernel = x.sign() < 0 ? -1 : 1;
    mpz_class scale_num = 1;
    mpz_class scale_den = 1;
    for (const auto& [p, e] : factor_integer(x.numerator(), bound)) {
        if (e % 2 == 1) kernel *= p;
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e / 2);
        scale_num *= power;
    }
    // 1/p^f = p^(f mod 2) / p^(2 ceil(f/2))
    for (const auto& [p, e] : factor_integer(x.denominator(), bound)) {
        if (e % 2 == 1) kernel *= p;
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), (e + 1) / 2);
        scale_den *= power;
    }
    return {kernel, Rational(scale_num, scale_den)};
}

bool is_squarefree(const mpz_class& n, std::uint64_t bound) {
    if (n == 0) return false;
    for (const auto& factor : factor_integer(n, bound))
        if (factor.second > 1) return false;
    return true;
}

bool is_square_rational(const Rational& x, std::uint64_t bound) {
    if (x.is_zero()) return true;
    if (x.sign() < 0) return false;
    return square_class(x, bound).kernel == 1;
}

int legendre_symbol(const mpz_class& a, const mpz_class& p) {
    if (p == 2 || !is_prime(p)) fail("InvalidPrime", p.get_str() + " is not an odd prime");
    mpz_class r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    mpz_class e = (p - 1) / 2;
    mpz_class out;
    mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return out == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------

void QuadElem::require_same_field(const QuadElem& o) const {
    if (d_ != o.d_)
        fail("FieldMismatch", "mixing Q(sqrt(" + std::to_string(d_) + ")) and Q(sqrt(" + std::to_string(o.d_) + "))");
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
    require_same_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
    require_same_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
    require_same_field(o);
    Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
    require_same_field(o);
    const Rational n = quad_norm(o);
    if (n.is_zero()) fail("DivisionByZero", "division by zero in quadratic field");
    *this *= quad_conjugate(o);
    a_ /= n;
    b_ /= n;
    return *this;
}

std::string QuadElem::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string radical = "sqrt(" + std::to_string(d_) + ")";
    std::string b_part = b_ == Rational(1) ? radical
                         : b_ == Rational(-1) ? "-" + radical
                                              : b_.to_string() + "*" + radical;
    if (a_.is_zero()) return b_part;
    if (b_part[0] == '-') return a_.to_string() + " - " + b_part.substr(1);
    return a_.to_string() + " + " + b_part;
}

QuadElem quad_conjugate(const QuadElem& x) { return {x.a(), -x.b(), x.d()}; }

Rational quad_norm(const QuadElem& x) { return x.a() * x.a() - Rational(x.d()) * x.b() * x.b(); }

QuadField::QuadField(std::int64_t d, std::uint64_t factor_bound) : d_(d) {
    if (d == 0 || d == 1) fail("InvalidField", "quadratic field parameter must differ from 0 and 1");
    if (!is_squarefree(mpz_class(static_cast<long>(d)), factor_bound))
        fail("InvalidField", std::to_string(d) + " is not squarefree");
}

// ---------------------------------------------------------------------------

void PrimeFieldElem::require_same_field(const PrimeFieldElem& o) const {
    if (p_ != o.p_)
        fail("FieldMismatch", "mixing F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
}

PrimeFieldElem& PrimeFieldElem::operator+=(const PrimeFieldElem& o) {
    require_same_field(o);
    value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) + o.value_) % p_);
    return *this;
}

PrimeFieldElem& PrimeFieldElem::operator-=(const PrimeFieldElem& o) {
    require_same_field(o);
    value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) + p_ - o.value_) % p_);
    return *this;
}

PrimeFieldElem& PrimeFieldElem::operator*=(const PrimeFieldElem& o) {
    require_same_field(o);
    value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) * o.value_) % p_);
    return *this;
}

PrimeFieldElem PrimeFieldElem::inverse() const {
    if (value_ == 0) fail("DivisionByZero", "inverse of zero in F_" + std::to_string(p_));
    // Fermat: x^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = value_;
    std::uint64_t e = p_ - 2;
    while (e > 0) {
        if (e & 1U) result = result * base % p_;
        base = base * base % p_;
        e >>= 1U;
    }
    return {static_cast<std::uint32_t>(result), p_};
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1U << 31U) || !is_prime(mpz_class(static_cast<unsigned long>(p))))
        fail("InvalidPrime", std::to_string(p) + " is not a prime below 2^31");
}

PrimeFieldElem PrimeField::from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r), p_};
}

PrimeFieldElem PrimeField::from_rational(const Rational& q) const {
    auto reduce = [this](const mpz_class& z) {
        mpz_class r = z % p_;
        if (r < 0) r += p_;
        return PrimeFieldElem(static_cast<std::uint32_t>(r.get_ui()), p_);
    };
    const PrimeFieldElem den = reduce(q.denominator());
    if (den.is_zero()) fail("NotInField", q.to_string() + " has a denominator divisible by " + std::to_string(p_));
    return reduce(q.numerator()) / den;
}

}  // namespace schurforge
