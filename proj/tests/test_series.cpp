#include "doctest.h"

#include <stdexcept>

#include "hocauchy/series.hpp"
#include "hocauchy/stirling.hpp"
#include "support.hpp"

using namespace hocauchy;
using hocauchy::test::P;
using hocauchy::test::Q;
using hocauchy::test::S;

namespace {

PowerSeries one_plus(int sign, int order) { return PowerSeries({Q(1), Q(sign)}, order); }

// (e^t - 1)/t at the given order
PowerSeries shifted_exp_m1(int order) {
    PowerSeries e = ps_exp_m1(order + 1);
    PowerSeries s(order);
    for (int j = 0; j < order; ++j) s[j] = e[j + 1];
    return s;
}

}  // namespace

TEST_CASE("series construction and truncation discipline") {
    const PowerSeries a = S({"1", "2", "3", "4"});
    const PowerSeries b = S({"1", "1"});
    CHECK((a + b).order() == 2);
    CHECK((a * b).order() == 2);
    CHECK(a.truncated(2) == S({"1", "2"}));
    CHECK_THROWS_AS(a.truncated(5), std::invalid_argument);
    CHECK_THROWS_AS(PowerSeries(0), std::invalid_argument);
    CHECK(PowerSeries(3).coeffs().size() == 3);
    CHECK(S({"0", "0", "5"}).valuation() == 2);
}

TEST_CASE("ps_mul") {
    CHECK(ps_mul(one_plus(1, 4), one_plus(-1, 4)) == S({"1", "0", "-1", "0"}));
    const PowerSeries f = S({"3", "-1/2", "7", "0", "1/9"});
    CHECK(ps_mul(f, PowerSeries::one(5)) == f);
    const PowerSeries quotient = ps_div(PowerSeries::t(9), ps_log1p(9));
    CHECK(ps_mul(ps_log1p(8), quotient) == PowerSeries::t(8));
}

TEST_CASE("ps_div") {
    // one order is spent on the cancelled factor t
    CHECK(ps_div(PowerSeries::t(5), ps_log1p(5)) == S({"1", "1/2", "-1/12", "1/24"}));
    const PowerSeries f = S({"2", "0", "-1/3"});
    CHECK(ps_div(f, PowerSeries::one(3)) == f);
    CHECK(ps_div(ps_exp_m1(4), PowerSeries::t(4)) == S({"1", "1/2", "1/6"}));
    CHECK_THROWS_AS(ps_div(f, PowerSeries(3)), std::domain_error);
    CHECK_THROWS_WITH_AS(ps_div(PowerSeries::t(4), S({"0", "0", "1", "1"})), "non-unit divisor", std::domain_error);
}

TEST_CASE("ps_div inverse property") {
    test::Gen gen(5);
    for (int i = 0; i < 40; ++i) {
        std::vector<Rational> c(10);
        for (auto& v : c) v = gen.small();
        if (c[0].is_zero()) c[0] = Q(1);
        const PowerSeries g(c);
        CHECK(ps_mul(ps_div(PowerSeries::one(10), g), g) == PowerSeries::one(10));
    }
}

TEST_CASE("ps_int_pow") {
    const PowerSeries f = S({"2", "3", "-1"});
    CHECK(ps_int_pow(f, 0) == PowerSeries::one(3));
    CHECK(ps_int_pow(one_plus(1, 3), 2) == S({"1", "2", "1"}));
    CHECK(ps_int_pow(shifted_exp_m1(3), -1) == S({"1", "-1/2", "1/12"}));
    CHECK_THROWS_WITH_AS(ps_int_pow(PowerSeries::t(3), -1), "non-unit base", std::domain_error);
    CHECK(ps_int_pow(f, 5) == f * f * f * f * f);
    CHECK(ps_int_pow(f, -3) * ps_int_pow(f, 3) == PowerSeries::one(3));
}

TEST_CASE("ps_log1p") {
    CHECK(ps_log1p(4) == S({"0", "1", "-1/2", "1/3"}));
    CHECK(ps_log1p(9)[1] == Q(1));
    const PowerSeries cube = ps_int_pow(ps_log1p(7), 3);
    CHECK(egf_coeff(cube, 6) / Rational(factorial(3)) == Q(-225));  // S1(6,3) = -225
    CHECK(stirling1_signed(6, 3) == -225);
}

TEST_CASE("ps_exp") {
    CHECK(ps_exp(PowerSeries::t(4)) == S({"1", "1", "1/2", "1/6"}));
    CHECK(ps_exp(PowerSeries(5)) == PowerSeries::one(5));
    CHECK(ps_exp(ps_log1p(10)) == one_plus(1, 10));
    CHECK_THROWS_AS(ps_exp(PowerSeries::one(3)), std::domain_error);
}

TEST_CASE("ps_compose") {
    const PowerSeries f = S({"3", "-1", "2/7", "5"});
    CHECK(ps_compose(f, PowerSeries::t(4)) == f);
    const PowerSeries em1 = ps_exp_m1(10);
    CHECK(ps_compose(em1, ps_log1p(10)) == PowerSeries::t(10));
    const PowerSeries geometric = S({"1", "1", "1", "1", "1", "1"});
    CHECK(ps_compose(geometric, S({"0", "0", "1", "0", "0", "0"})) == S({"1", "0", "1", "0", "1", "0"}));
    CHECK_THROWS_WITH_AS(ps_compose(f, S({"1", "1"})), "composition needs zero constant term", std::domain_error);
}

TEST_CASE("ps_revert") {
    CHECK(ps_revert(PowerSeries::t(6)) == PowerSeries::t(6));
    CHECK(ps_revert(ps_exp_m1(10)) == ps_log1p(10));
    const PowerSeries em1_neg = ps_exp_linear(Q(-1), 10) - PowerSeries::one(10);
    CHECK(ps_revert(em1_neg) == -ps_log1p(10));
    CHECK_THROWS_WITH_AS(ps_revert(S({"1", "1", "0"})), "not a delta series", std::domain_error);
    CHECK_THROWS_AS(ps_revert(S({"0", "0", "1"})), std::domain_error);
}

TEST_CASE("ps_revert round trip (property)") {
    test::Gen gen(2024);
    for (int i = 0; i < 30; ++i) {
        std::vector<Rational> c(12);
        c[1] = gen.small();
        if (c[1].is_zero()) c[1] = Q(2, 3);
        for (int j = 2; j < 12; ++j) c[static_cast<std::size_t>(j)] = gen.small();
        const PowerSeries f(c);
        const PowerSeries g = ps_revert(f);
        CHECK(ps_compose(f, g) == PowerSeries::t(12));
        CHECK(ps_compose(g, f) == PowerSeries::t(12));
    }
}

TEST_CASE("truncation consistency (property)") {
    for (int low = 2; low <= 10; ++low) {
        const int high = low + 5;
        CHECK(ps_revert(ps_exp_m1(high)).truncated(low) == ps_revert(ps_exp_m1(low)));
        CHECK(named_series("cauchy1_gf", high).truncated(low) == named_series("cauchy1_gf", low));
        CHECK(named_series("bernoulli_gf(-2)", high).truncated(low) == named_series("bernoulli_gf(-2)", low));
        CHECK(ps_exp(ps_log1p(high)).truncated(low) == ps_exp(ps_log1p(low)));
    }
}

TEST_CASE("egf_coeff") {
    const PowerSeries c1 = named_series("cauchy1_gf", 6);
    CHECK(egf_coeff(c1, 0) == Q(1));
    CHECK(egf_coeff(c1, 2) == Q(-1, 6));
    CHECK(egf_coeff(ps_int_pow(c1, 2), 2) == Q(1, 6));
    CHECK_THROWS_WITH_AS(egf_coeff(c1, 6), "insufficient truncation", std::out_of_range);
}

TEST_CASE("apply_operator") {
    // e^{aD} p(x) = p(x + a)
    const RatPolynomial p = P({"1", "-2", "0", "3"});
    CHECK(apply_operator(ps_exp_linear(Q(5, 2), 4), p) == poly_shift(p, Q(5, 2)));
    CHECK(apply_operator(PowerSeries::t(4), p) == poly_derivative(p));
    CHECK_THROWS_AS(apply_operator(PowerSeries::t(3), p), std::out_of_range);
}

TEST_CASE("sheffer_polys") {
    const int n_max = 8;
    const int order = n_max + 1;
    const auto identity = sheffer_polys(PowerSeries::one(order), PowerSeries::t(order), n_max);
    for (int n = 0; n <= n_max; ++n) CHECK(identity[static_cast<std::size_t>(n)] == RatPolynomial::monomial(Q(1), n));

    const auto falling = sheffer_polys(PowerSeries::one(order), ps_exp_m1(order), n_max);
    for (int n = 0; n <= n_max; ++n) CHECK(falling[static_cast<std::size_t>(n)] == falling_factorial(n));

    // (t/(1-e^{-t}), e^{-t}-1) gives 1/2 - x at n = 1 (unit-interval integral of x1 - x)
    const PowerSeries one_minus = PowerSeries::one(order + 1) - ps_exp_linear(Q(-1), order + 1);
    const PowerSeries g = ps_div(PowerSeries::t(order + 1), one_minus);
    const PowerSeries f = ps_exp_linear(Q(-1), order) - PowerSeries::one(order);
    const auto cauchy = sheffer_polys(g, f, 2);
    CHECK(cauchy[1] == P({"1/2", "-1"}));
    CHECK(cauchy[2] == P({"-1/6", "0", "1"}));  // (x)_2 integrated: -1/6 + x^2 at k = 1

    CHECK(sheffer_polys(PowerSeries::one(1), PowerSeries::t(1), 0) == std::vector<RatPolynomial>{P({"1"})});
    CHECK_THROWS_AS(sheffer_polys(PowerSeries::one(3), PowerSeries::t(3), 5), std::out_of_range);
}

TEST_CASE("connection_coeffs") {
    const int order = 7;
    const PowerSeries g = S({"2", "1", "0", "1", "0", "0", "0"});
    const PowerSeries f = ps_exp_m1(order);
    const TriangularMatrix same = connection_coeffs(g, f, g, f, order - 1);
    for (int n = 0; n < order; ++n)
        for (int m = 0; m <= n; ++m) CHECK(same[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] == Q(n == m ? 1 : 0));

    const TriangularMatrix single = connection_coeffs(S({"3"}), S({"0"}), S({"5"}), S({"0"}), 0);
    CHECK(single.size() == 1);
    CHECK(single[0][0] == Q(5, 3));

    // powers to falling factorials: x^n = sum S2(n,m) (x)_m
    const TriangularMatrix s2 = connection_coeffs(PowerSeries::one(order), PowerSeries::t(order), PowerSeries::one(order), f, order - 1);
    for (int n = 0; n < order; ++n)
        for (int m = 0; m <= n; ++m) CHECK(s2[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] == Rational(stirling2(n, m)));
}

TEST_CASE("named series registry") {
    CHECK(named_series("cauchy1_gf", 3) == S({"1", "1/2", "-1/12"}));
    CHECK(named_series("log1p", 3) == S({"0", "1", "-1/2"}));
    CHECK(named_series("bernoulli_gf(0)", 2) == S({"1", "0"}));
    CHECK(named_series("bernoulli_gf", 3, 1) == S({"1", "-1/2", "1/12"}));
    CHECK(named_series("exp_m1", 3) == S({"0", "1", "1/2"}));
    CHECK(named_series("cauchy2_gf", 3) == S({"1", "-1/2", "5/12"}));
    CHECK_THROWS_AS(named_series("nope", 3), std::invalid_argument);
    CHECK_THROWS_AS(named_series("bernoulli_gf(x)", 3), std::invalid_argument);
    CHECK_THROWS_AS(named_series("bernoulli_gf", 3), std::invalid_argument);
}

TEST_CASE("polynomial-coefficient series: (1+t)^x") {
    const int order = 6;
    const PolySeries binom_series = ps_exp_scaled(RatPolynomial::identity(), ps_log1p(order));
    // [t^n] (1+t)^x = (x)_n / n!
    for (int n = 0; n < order; ++n) CHECK(egf_coeff(binom_series, n) == falling_factorial(n));
    // (1+t)^x (1+t)^{-x} = 1
    const PolySeries inverse = ps_exp_scaled(-RatPolynomial::identity(), ps_log1p(order));
    CHECK(binom_series * inverse == PolySeries::one(order));
    CHECK(ps_div(PolySeries::one(order), binom_series) == inverse);
}
