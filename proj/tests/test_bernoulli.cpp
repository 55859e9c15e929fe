#include "doctest.h"

#include "hocauchy/bernoulli.hpp"
#include "hocauchy/series.hpp"
#include "support.hpp"

using namespace hocauchy;
using hocauchy::test::P;
using hocauchy::test::Q;

TEST_CASE("bernoulli_hi_numbers") {
    const auto zero_order = bernoulli_hi_numbers(6, 0);
    CHECK(zero_order.size() == 7);
    CHECK(zero_order[0] == Q(1));
    for (int n = 1; n <= 6; ++n) CHECK(zero_order[static_cast<std::size_t>(n)] == Q(0));

    CHECK(bernoulli_hi_numbers(2, 1)[2] == Q(1, 6));
    CHECK(bernoulli_hi_numbers(2, 2)[2] == Q(5, 6));
    // classical B_0..B_6 with B_1 = -1/2
    const auto classical = bernoulli_hi_numbers(6, 1);
    const std::vector<Rational> expected{Q(1), Q(-1, 2), Q(1, 6), Q(0), Q(-1, 30), Q(0), Q(1, 42)};
    CHECK(classical == expected);
    CHECK(bernoulli_hi_numbers(-1, 3).empty());
}

TEST_CASE("bernoulli_hi_poly") {
    for (int n = 0; n <= 6; ++n) CHECK(bernoulli_hi_poly(n, 0) == RatPolynomial::monomial(Q(1), n));
    CHECK(bernoulli_hi_poly(1, 1) == P({"-1/2", "1"}));
    CHECK(bernoulli_hi_poly(2, 2)(Q(1)) == Q(-1, 6));
    // frozen from an independent series expansion
    CHECK(bernoulli_hi_poly(2, 2) == P({"5/6", "-2", "1"}));
    CHECK(bernoulli_hi_poly(3, -1) == P({"1/4", "1", "3/2", "1"}));
    CHECK(bernoulli_hi_poly(4, 3) == P({"19/10", "-9", "12", "-6", "1"}));
    for (long alpha = -4; alpha <= 4; ++alpha)
        for (int n = 0; n <= 8; ++n) {
            const RatPolynomial b = bernoulli_hi_poly(n, alpha);
            CHECK(b.degree() == n);
            CHECK(b.leading() == Q(1));
        }
}

TEST_CASE("order additivity") {
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            const auto ba = bernoulli_hi_numbers(12, a);
            const auto bb = bernoulli_hi_numbers(12, b);
            const auto bs = bernoulli_hi_numbers(12, a + b);
            for (int n = 0; n <= 12; ++n) {
                Rational sum(0);
                for (int j = 0; j <= n; ++j)
                    sum += Rational(binomial(n, j)) * ba[static_cast<std::size_t>(j)] * bb[static_cast<std::size_t>(n - j)];
                CHECK(sum == bs[static_cast<std::size_t>(n)]);
            }
        }
}

TEST_CASE("negative order is an inverse") {
    for (long a = 1; a <= 4; ++a) {
        const auto pos = bernoulli_hi_numbers(10, a);
        const auto neg = bernoulli_hi_numbers(10, -a);
        for (int n = 0; n <= 10; ++n) {
            Rational sum(0);
            for (int j = 0; j <= n; ++j)
                sum += Rational(binomial(n, j)) * pos[static_cast<std::size_t>(j)] * neg[static_cast<std::size_t>(n - j)];
            CHECK(sum == Q(n == 0 ? 1 : 0));
        }
    }
}

TEST_CASE("difference identity") {
    // (t/(e^t-1))^a e^{xt}(e^t - 1) = t (t/(e^t-1))^{a-1} e^{xt}:
    // B_n^(a)(x+1) - B_n^(a)(x) = n B_{n-1}^(a-1)(x)
    for (long a = 1; a <= 2; ++a)
        for (int n = 1; n <= 10; ++n) {
            const RatPolynomial b = bernoulli_hi_poly(n, a);
            CHECK(poly_shift(b, Q(1)) - b == bernoulli_hi_poly(n - 1, a - 1) * Q(n));
        }
}

TEST_CASE("cache growth is consistent") {
    const auto small = bernoulli_hi_numbers(3, 7);
    const auto large = bernoulli_hi_numbers(20, 7);
    const auto again = bernoulli_hi_numbers(5, 7);
    for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == large[i]);
    for (std::size_t i = 0; i < again.size(); ++i) CHECK(again[i] == large[i]);
}
