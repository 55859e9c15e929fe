#ifndef HOCAUCHY_RATIONAL_HPP
#define HOCAUCHY_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hocauchy {

using BigInt = mpz_class;

/// Exact rational number in canonical form: positive denominator,
/// gcd(|num|, den) = 1, zero stored as 0/1. Equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
    explicit Rational(const BigInt& value) : value_(value) {}
    /// Throws std::domain_error("division by zero") when den == 0.
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Accepts "[-]digits" or "[-]digits/digits"; throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Canonical text: "-19/30", "3", "0".
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const { Rational r; r.value_ = -value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Multiplicative inverse; throws std::domain_error on zero.
    [[nodiscard]] Rational inverse() const;
    /// Integer power, negative exponents allowed for nonzero values.
    [[nodiscard]] Rational pow(long exponent) const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact integer.
BigInt factorial(long n);
/// Binomial coefficient with the convention binom(n, k) = 0 for k < 0 or
/// k > n when n >= 0. Negative upper index uses the generalized definition.
BigInt binomial(long n, long k);

}  // namespace hocauchy

#endif  // HOCAUCHY_RATIONAL_HPP
