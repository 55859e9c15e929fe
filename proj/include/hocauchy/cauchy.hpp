#ifndef HOCAUCHY_CAUCHY_HPP
#define HOCAUCHY_CAUCHY_HPP

#include <string_view>

#include "hocauchy/polynomial.hpp"
#include "hocauchy/rational.hpp"

namespace hocauchy {

enum class CauchyKind { first, second };

/// Independent routes to the higher-order Cauchy numbers. All of them must
/// return the same Rational.
enum class CauchyMethod {
    stirling_sum,      ///< Stirling numbers times unit-cube moments
    convolution,       ///< multinomial convolution of classical Cauchy numbers
    gf_coeff,          ///< EGF coefficient of the k-th power generating function
    bernoulli_bridge,  ///< higher-order Bernoulli polynomial of order n-k+1
    integral_oracle,   ///< iterated antiderivatives, no Stirling numbers
};

/// Routes to the higher-order Cauchy polynomials.
enum class CauchyPolyMethod { triple_sum, bernoulli_bridge, gf_coeff, integral_oracle };

std::string_view to_string(CauchyMethod m);
std::string_view to_string(CauchyPolyMethod m);

// Classical numbers: integrals over [0,1] of (x)_n and (-x)_n.
Rational cauchy1(int n);
Rational cauchy2(int n);

// Poly-Cauchy numbers: k-fold unit-cube integrals of (x_1...x_k)_n and (-x_1...x_k)_n.
Rational poly_cauchy1(int n, int k);
Rational poly_cauchy2(int n, int k);

/// sum_m [n m] (-1)^(n-m) sum_i binom(m,i) (-z)^i / (m-i+1)^k.
Rational poly_cauchy_poly1(int n, int k, const Rational& z);
/// sum_m [n m] (-1)^n sum_i binom(m,i) (-z)^i / (m-i+1)^k.
Rational poly_cauchy_poly2(int n, int k, const Rational& z);

/// Exact integral of p(x_1 + ... + x_k) over the unit cube, by k rounds of
/// q(u) <- P(u+1) - P(u) with P the antiderivative of q, then q(0).
Rational cube_integrate(const RatPolynomial& p, int k);
/// Exact integral of p(x_1 * ... * x_k) over the unit cube: sum_j p_j/(j+1)^k.
Rational product_cube_integrate(const RatPolynomial& p, int k);

/// Integral over the unit cube of (x_1+...+x_k)^j, summed over compositions
/// of j as multinomial(j; j_1..j_k) / prod (j_i + 1). Cached.
Rational cube_moment(int j, int k);

/// Higher-order Cauchy numbers C_n^(k) (first kind) and their second-kind
/// counterparts. k = 0 gives delta_{n,0}; integral_oracle needs k >= 1.
Rational cauchy_hi1(int n, int k, CauchyMethod method = CauchyMethod::stirling_sum);
Rational cauchy_hi2(int n, int k, CauchyMethod method = CauchyMethod::stirling_sum);
Rational cauchy_hi(CauchyKind kind, int n, int k, CauchyMethod method = CauchyMethod::stirling_sum);

/// C_n^(k)(x) and its second-kind counterpart through one route.
RatPolynomial cauchy_hi_poly1(int n, int k, CauchyPolyMethod method);
RatPolynomial cauchy_hi_poly2(int n, int k, CauchyPolyMethod method);

/// Triple-sum expansion cross-checked coefficientwise against the Bernoulli
/// bridge; throws std::logic_error if they ever disagree.
RatPolynomial cauchy_hi_poly1(int n, int k);
RatPolynomial cauchy_hi_poly2(int n, int k);
RatPolynomial cauchy_hi_poly(CauchyKind kind, int n, int k, CauchyPolyMethod method);

/// Oracle value of the polynomial at a point: cube integral of
/// (s - x)_n (first kind) or (x - s)_n (second kind), s = x_1 + ... + x_k.
Rational cauchy_hi_poly_oracle_at(CauchyKind kind, int n, int k, const Rational& x);

}  // namespace hocauchy

#endif  // HOCAUCHY_CAUCHY_HPP
