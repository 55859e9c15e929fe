#ifndef HOCAUCHY_POLYNOMIAL_HPP
#define HOCAUCHY_POLYNOMIAL_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hocauchy/rational.hpp"

namespace hocauchy {

/// Dense univariate polynomial over Rational. coeffs()[i] is the
/// coefficient of x^i; the highest stored coefficient is never zero, and
/// the zero polynomial has no coefficients at all.
class RatPolynomial {
public:
    RatPolynomial() = default;
    explicit RatPolynomial(std::vector<Rational> coeffs);
    RatPolynomial(std::initializer_list<Rational> coeffs)
        : RatPolynomial(std::vector<Rational>(coeffs)) {}

    static RatPolynomial constant(const Rational& c);
    static RatPolynomial monomial(const Rational& c, int power);
    /// The polynomial x.
    static RatPolynomial identity();

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i, zero past the degree.
    [[nodiscard]] Rational coeff(int i) const;
    [[nodiscard]] Rational leading() const;

    RatPolynomial& operator+=(const RatPolynomial& rhs);
    RatPolynomial& operator-=(const RatPolynomial& rhs);
    RatPolynomial& operator*=(const RatPolynomial& rhs);
    RatPolynomial& operator*=(const Rational& scalar);

    friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
    friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
    friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
    friend RatPolynomial operator*(RatPolynomial a, const Rational& s) { return a *= s; }
    friend RatPolynomial operator*(const Rational& s, RatPolynomial a) { return a *= s; }
    RatPolynomial operator-() const;

    friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

    /// Horner evaluation.
    [[nodiscard]] Rational operator()(const Rational& x) const;

    [[nodiscard]] std::vector<std::string> coeff_strings() const;
    /// Human-readable form, highest power first: "x^2 - x + 1/6".
    [[nodiscard]] std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RatPolynomial& p);

RatPolynomial poly_mul(const RatPolynomial& p, const RatPolynomial& q);
Rational poly_eval(const RatPolynomial& p, const Rational& x);
/// q(x) = p(x + a), via binomial expansion.
RatPolynomial poly_shift(const RatPolynomial& p, const Rational& a);
/// q(x) = p(-x).
RatPolynomial poly_reflect(const RatPolynomial& p);
/// P with P' = p and P(0) = 0.
RatPolynomial poly_antideriv(const RatPolynomial& p);
RatPolynomial poly_derivative(const RatPolynomial& p);

/// (x)_n = x(x-1)...(x-n+1).
RatPolynomial falling_factorial(int n);
/// x^(n) = x(x+1)...(x+n-1).
RatPolynomial rising_factorial(int n);

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
/// Nodes must be distinct.
RatPolynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace hocauchy

#endif  // HOCAUCHY_POLYNOMIAL_HPP
