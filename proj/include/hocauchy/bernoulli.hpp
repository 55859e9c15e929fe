#ifndef HOCAUCHY_BERNOULLI_HPP
#define HOCAUCHY_BERNOULLI_HPP

#include <vector>

#include "hocauchy/polynomial.hpp"
#include "hocauchy/rational.hpp"

namespace hocauchy {

/// B_0^(alpha) .. B_{n_max}^(alpha): EGF coefficients of (t/(e^t-1))^alpha.
/// Any integer order is allowed; order <= 0 comes from powers of the
/// inverse series (e^t-1)/t. Results are cached per order.
std::vector<Rational> bernoulli_hi_numbers(int n_max, long alpha);

/// B_n^(alpha)(x) = sum_j binom(n, j) B_j^(alpha) x^(n-j). Monic of degree n.
RatPolynomial bernoulli_hi_poly(int n, long alpha);

}  // namespace hocauchy

#endif  // HOCAUCHY_BERNOULLI_HPP
