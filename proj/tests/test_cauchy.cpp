#include "doctest.h"

#include <array>
#include <stdexcept>

#include "hocauchy/bernoulli.hpp"
#include "hocauchy/cauchy.hpp"
#include "hocauchy/stirling.hpp"
#include "support.hpp"

using namespace hocauchy;
using hocauchy::test::P;
using hocauchy::test::Q;
using hocauchy::test::Qs;

namespace {

constexpr std::array kMethods{CauchyMethod::stirling_sum, CauchyMethod::convolution, CauchyMethod::gf_coeff,
                              CauchyMethod::bernoulli_bridge, CauchyMethod::integral_oracle};
constexpr std::array kPolyMethods{CauchyPolyMethod::triple_sum, CauchyPolyMethod::bernoulli_bridge,
                                  CauchyPolyMethod::gf_coeff, CauchyPolyMethod::integral_oracle};

// frozen from symbolic k-fold integration, n = 0..6, k = 1..3
const std::array<std::array<const char*, 7>, 3> kFirstKind{{
    {"1", "1/2", "-1/6", "1/4", "-19/30", "9/4", "-863/84"},
    {"1", "1", "1/6", "0", "-1/10", "1/2", "-221/84"},
    {"1", "3/2", "1", "0", "1/10", "-1/4", "16/21"},
}};
const std::array<std::array<const char*, 7>, 3> kSecondKind{{
    {"1", "-1/2", "5/6", "-9/4", "251/30", "-475/12", "19087/84"},
    {"1", "-1", "13/6", "-7", "299/10", "-317/2", "84199/84"},
    {"1", "-3/2", "4", "-15", "721/10", "-1687/4", "121937/42"},
}};

}  // namespace

TEST_CASE("classical Cauchy numbers") {
    CHECK(cauchy1(0) == Q(1));
    CHECK(cauchy1(1) == Q(1, 2));
    CHECK(cauchy1(2) == Q(-1, 6));
    CHECK(cauchy2(0) == Q(1));
    CHECK(cauchy2(1) == Q(-1, 2));
    CHECK(cauchy2(2) == Q(5, 6));
    for (int n = 0; n <= 6; ++n) {
        CHECK(cauchy1(n) == Qs(kFirstKind[0][static_cast<std::size_t>(n)]));
        CHECK(cauchy2(n) == Qs(kSecondKind[0][static_cast<std::size_t>(n)]));
    }
    // second printed form: (-1)^n sum [n m] (-1)^m / (m+1)
    for (int n = 0; n <= 12; ++n) {
        Rational alt(0);
        for (int m = 0; m <= n; ++m) alt += Rational(stirling1_unsigned(n, m)) * Q(m % 2 ? -1 : 1) / Q(m + 1);
        CHECK(cauchy1(n) == alt * Q(n % 2 ? -1 : 1));
    }
    CHECK_THROWS_AS(cauchy1(-1), std::invalid_argument);
}

TEST_CASE("poly-Cauchy numbers") {
    for (int n = 0; n <= 10; ++n) {
        CHECK(poly_cauchy1(n, 1) == cauchy1(n));
        CHECK(poly_cauchy2(n, 1) == cauchy2(n));
    }
    CHECK(poly_cauchy1(1, 2) == Q(1, 4));
    CHECK(poly_cauchy1(2, 2) == Q(-5, 36));
    for (int k = 1; k <= 4; ++k) CHECK(poly_cauchy2(0, k) == Q(1));
    CHECK(poly_cauchy2(1, 2) == Q(-1, 4));
    CHECK_THROWS_AS(poly_cauchy1(2, 0), std::invalid_argument);
}

TEST_CASE("poly-Cauchy polynomials") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 1; k <= 3; ++k) {
            CHECK(poly_cauchy_poly1(n, k, Q(0)) == poly_cauchy1(n, k));
            CHECK(poly_cauchy_poly2(n, k, Q(0)) == poly_cauchy2(n, k));
        }
    for (const Rational z : {Q(0), Q(1), Q(-3, 7), Q(5, 2)}) {
        CHECK(poly_cauchy_poly1(1, 1, z) == Q(1, 2) - z);
        CHECK(poly_cauchy_poly2(1, 1, z) == z - Q(1, 2));
    }
    CHECK(poly_cauchy_poly1(2, 1, Q(1)) == Q(5, 6));
    CHECK(poly_cauchy_poly2(2, 2, Q(1, 2)) == Q(-5, 36));
    CHECK(poly_cauchy_poly1(3, 2, Q(-3, 7)) == Q(4145, 16464));
    CHECK(poly_cauchy_poly2(3, 3, Q(1, 2)) == Q(193, 576));
}

TEST_CASE("poly-Cauchy polynomials agree with the product-cube oracle") {
    for (int n = 0; n <= 8; ++n)
        for (int k = 1; k <= 4; ++k)
            for (const Rational z : {Q(0), Q(1), Q(-1), Q(1, 2), Q(-3, 7)}) {
                const RatPolynomial ff = falling_factorial(n);
                CHECK(poly_cauchy_poly1(n, k, z) == product_cube_integrate(poly_shift(ff, -z), k));
                CHECK(poly_cauchy_poly2(n, k, z) == product_cube_integrate(poly_reflect(poly_shift(ff, z)), k));
            }
}

TEST_CASE("cube_integrate") {
    for (int k = 1; k <= 6; ++k) CHECK(cube_integrate(P({"1"}), k) == Q(1));
    CHECK(cube_integrate(P({"0", "1"}), 1) == Q(1, 2));
    CHECK(cube_integrate(falling_factorial(2), 2) == Q(1, 6));
    // E[s^2] for s a sum of k uniforms is k/12 + k^2/4
    for (int k = 1; k <= 6; ++k) CHECK(cube_integrate(P({"0", "0", "1"}), k) == Q(k, 12) + Q(k * k, 4));
    CHECK(product_cube_integrate(P({"0", "1"}), 2) == Q(1, 4));
    for (int j = 0; j <= 6; ++j)
        for (int k = 1; k <= 4; ++k) CHECK(cube_moment(j, k) == cube_integrate(RatPolynomial::monomial(Q(1), j), k));
}

TEST_CASE("higher-order numbers: frozen values through every route") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 6; ++n)
            for (CauchyMethod m : kMethods) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(to_string(m));
                CHECK(cauchy_hi1(n, k, m) == Qs(kFirstKind[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n)]));
                CHECK(cauchy_hi2(n, k, m) == Qs(kSecondKind[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n)]));
            }
    for (int k = 0; k <= 5; ++k) CHECK(cauchy_hi1(0, k) == Q(1));
    CHECK(cauchy_hi1(1, 2) == Q(1));
    CHECK(cauchy_hi1(2, 2) == Q(1, 6));
    CHECK(cauchy_hi2(1, 2) == Q(-1));
    CHECK(cauchy_hi2(2, 1) == Q(5, 6));
}

TEST_CASE("k = 0 convention") {
    for (int n = 0; n <= 8; ++n)
        for (CauchyMethod m : kMethods) {
            if (m == CauchyMethod::integral_oracle) {
                CHECK_THROWS_AS(cauchy_hi1(n, 0, m), std::invalid_argument);
                continue;
            }
            CHECK(cauchy_hi1(n, 0, m) == Q(n == 0 ? 1 : 0));
            CHECK(cauchy_hi2(n, 0, m) == Q(n == 0 ? 1 : 0));
        }
}

TEST_CASE("higher-order polynomials") {
    CHECK(cauchy_hi_poly1(1, 1) == P({"1/2", "-1"}));
    CHECK(cauchy_hi_poly1(2, 2) == P({"1/6", "-1", "1"}));
    CHECK(cauchy_hi_poly1(3, 2) == P({"0", "1/2", "0", "-1"}));
    CHECK(cauchy_hi_poly2(1, 1) == P({"-1/2", "1"}));
    CHECK(cauchy_hi_poly2(1, 2) == P({"-1", "1"}));
    CHECK(cauchy_hi_poly2(2, 2) == P({"13/6", "-3", "1"}));
    CHECK(cauchy_hi_poly2(3, 2) == P({"-7", "23/2", "-6", "1"}));
    for (int n = 0; n <= 7; ++n)
        for (int k = 1; k <= 3; ++k) {
            const RatPolynomial first = cauchy_hi_poly1(n, k);
            const RatPolynomial second = cauchy_hi_poly2(n, k);
            CHECK(first(Q(0)) == cauchy_hi1(n, k));
            CHECK(second(Q(0)) == cauchy_hi2(n, k));
            CHECK(first.degree() == n);
            for (CauchyPolyMethod m : kPolyMethods) {
                CAPTURE(to_string(m));
                CHECK(cauchy_hi_poly1(n, k, m) == first);
                CHECK(cauchy_hi_poly2(n, k, m) == second);
            }
            CHECK(first == poly_reflect(poly_shift(bernoulli_hi_poly(n, n - k + 1), Q(1))));
        }
}

TEST_CASE("oracle at points") {
    CHECK(cauchy_hi_poly_oracle_at(CauchyKind::first, 1, 1, Q(3)) == Q(1, 2) - Q(3));
    CHECK(cauchy_hi_poly_oracle_at(CauchyKind::second, 1, 2, Q(1, 2)) == Q(-1, 2));
    const RatPolynomial p = cauchy_hi_poly1(5, 3);
    for (const Rational x : {Q(0), Q(1), Q(-1), Q(1, 2), Q(-3, 7)})
        CHECK(p(x) == cauchy_hi_poly_oracle_at(CauchyKind::first, 5, 3, x));
}
