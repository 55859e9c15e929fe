#include "hocauchy/verifier.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "hocauchy/bernoulli.hpp"
#include "hocauchy/cauchy.hpp"
#include "hocauchy/polynomial.hpp"
#include "hocauchy/series.hpp"
#include "hocauchy/stirling.hpp"

namespace hocauchy {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

struct CheckName {
    CheckId id;
    std::string_view name;
};

constexpr CheckName kNames[] = {
    {CheckId::T1, "T1"},       {CheckId::T2, "T2"},       {CheckId::T3, "T3"},
    {CheckId::T4, "T4"},       {CheckId::T5, "T5"},       {CheckId::T6, "T6"},
    {CheckId::T7, "T7"},       {CheckId::T8, "T8"},       {CheckId::T9, "T9"},
    {CheckId::T10, "T10"},     {CheckId::T12, "T12"},     {CheckId::T13, "T13"},
    {CheckId::L11, "L11"},     {CheckId::EQ6, "EQ6"},     {CheckId::EQ7, "EQ7"},
    {CheckId::EQ19, "EQ19"},   {CheckId::EQ28, "EQ28"},   {CheckId::EQ52, "EQ52"},
    {CheckId::EQ53, "EQ53"},   {CheckId::EQ58, "EQ58"},   {CheckId::EQ59_61, "EQ59_61"},
    {CheckId::POLYC_ORACLE, "POLYC_ORACLE"},
};

constexpr std::string_view kTagBasisIndex = "t13-basis-index-m";
constexpr std::string_view kTagPolyCauchySign = "polycauchy2-sign-per-oracle";
constexpr std::string_view kTagIntegrandIndex = "polycauchy-integrand-index-n";
constexpr std::string_view kTagSpuriousSign = "drop-spurious-(-1)^k";

using Params = std::vector<std::pair<std::string, std::string>>;

class Sweep {
public:
    template <class V>
    void compare(std::string_view relation, const Params& params, const V& lhs, const V& rhs) {
        ++cases_;
        if (lhs == rhs) return;
        ++failures_;
        if (examples_.size() < kMaxCounterexamples)
            examples_.push_back({std::string(relation), params, lhs.to_string(), rhs.to_string()});
    }

    [[nodiscard]] long cases() const { return cases_; }
    [[nodiscard]] long failures() const { return failures_; }
    [[nodiscard]] const std::vector<Counterexample>& examples() const { return examples_; }

private:
    long cases_ = 0;
    long failures_ = 0;
    std::vector<Counterexample> examples_;
};

Params P(std::initializer_list<std::pair<const char*, long>> values) {
    Params out;
    for (const auto& [name, v] : values) out.emplace_back(name, std::to_string(v));
    return out;
}

Rational Q(long v) { return Rational(v); }
Rational sgn(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }
Rational S1(long n, long l) { return Rational(stirling1_signed(n, l)); }
Rational S2(long n, long l) { return Rational(stirling2(n, l)); }
Rational binom(long n, long k) { return Rational(binomial(n, k)); }
Rational fact(long n) { return Rational(factorial(n)); }

RatPolynomial X() { return RatPolynomial::identity(); }
RatPolynomial mono(const Rational& c, int power) { return RatPolynomial::monomial(c, power); }
/// (x + a)^j
RatPolynomial shifted_power(int j, long a) { return poly_shift(mono(Q(1), j), Q(a)); }

// Series shared by the checks, all at order N = n_max + 1.
PowerSeries exp_m1_over_t(int order) {  // (e^t - 1)/t
    return ps_div(ps_exp_m1(order + 1), PowerSeries::t(order + 1));
}
PowerSeries one_minus_exp_neg_over_t(int order) {  // (1 - e^{-t})/t
    return ps_div(PowerSeries::one(order + 1) - ps_exp_linear(Q(-1), order + 1), PowerSeries::t(order + 1));
}
PowerSeries exp_neg_m1(int order) { return ps_exp_linear(Q(-1), order) - PowerSeries::one(order); }

/// Higher-order Cauchy polynomials for n = 0..n_max, computed once per k.
class PolyTable {
public:
    PolyTable(CauchyKind kind, const Grid& g) {
        for (int k = 1; k <= g.k_max; ++k) {
            auto& row = rows_.emplace_back();
            for (int n = 0; n <= g.n_max; ++n) row.push_back(cauchy_hi_poly(kind, n, k, CauchyPolyMethod::triple_sum));
        }
    }
    [[nodiscard]] const RatPolynomial& at(int n, int k) const {
        return rows_.at(static_cast<std::size_t>(k - 1)).at(static_cast<std::size_t>(n));
    }

private:
    std::vector<std::vector<RatPolynomial>> rows_;
};

// -- checks ---------------------------------------------------------------
// Each takes the grid and whether to apply the check's corrected reading.

void check_t1(const Grid& g, bool, Sweep& s) {
    for (int n = 0; n <= g.n_max; ++n)
        for (int k = 1; k <= g.k_max; ++k)
            s.compare("definition = B_n^(n-k+1)(1)", P({{"n", n}, {"k", k}}), cauchy_hi1(n, k, CauchyMethod::integral_oracle),
                      bernoulli_hi_poly(n, n - k + 1)(Q(1)));
}

void check_t2(const Grid& g, bool, Sweep& s) {
    for (int n = 0; n <= g.n_max; ++n)
        for (int k = 1; k <= g.k_max; ++k) {
            const Params p = P({{"n", n}, {"k", k}});
            const Rational def = cauchy_hi1(n, k, CauchyMethod::integral_oracle);
            s.compare("definition = multinomial convolution", p, def, cauchy_hi1(n, k, CauchyMethod::convolution));
            s.compare("definition = Stirling/multinomial sum", p, def, cauchy_hi1(n, k, CauchyMethod::stirling_sum));
            s.compare("definition = EGF coefficient", p, def, cauchy_hi1(n, k, CauchyMethod::gf_coeff));
        }
}

void check_t3(const Grid& g, bool, Sweep& s) {
    for (int m = 0; m <= g.n_max; ++m)
        for (int k = 1; k <= g.k_max; ++k) {
            Rational via_cauchy(0), via_bernoulli(0);
            for (int n = 0; n <= m; ++n) {
                via_cauchy += cauchy_hi1(n, k) * S2(m, n);
                via_bernoulli += bernoulli_hi_poly(n, n - k + 1)(Q(1)) * S2(m, n);
            }
            const Params p = P({{"m", m}, {"k", k}});
            s.compare("S2(m+k,k) = binom(m+k,m) sum C_n^(k) S2(m,n)", p, S2(m + k, k), binom(m + k, m) * via_cauchy);
            s.compare("S2(m+k,k) = binom(m+k,m) sum B_n^(n-k+1)(1) S2(m,n)", p, S2(m + k, k), binom(m + k, m) * via_bernoulli);
        }
}

void check_poly_theorem(CauchyKind kind, const Grid& g, Sweep& s) {
    const bool first = kind == CauchyKind::first;
    for (int n = 0; n <= g.n_max; ++n)
        for (int k = 1; k <= g.k_max; ++k) {
            const Params p = P({{"n", n}, {"k", k}});
            const RatPolynomial def = cauchy_hi_poly(kind, n, k, CauchyPolyMethod::integral_oracle);
            s.compare(first ? "definition = B_n^(n-k+1)(1-x)" : "definition = B_n^(n-k+1)(x-k+1)", p, def,
                      cauchy_hi_poly(kind, n, k, CauchyPolyMethod::bernoulli_bridge));
            s.compare("definition = triple sum", p, def, cauchy_hi_poly(kind, n, k, CauchyPolyMethod::triple_sum));
        }
}

void check_t4(const Grid& g, bool, Sweep& s) { check_poly_theorem(CauchyKind::first, g, s); }
void check_t7(const Grid& g, bool, Sweep& s) { check_poly_theorem(CauchyKind::second, g, s); }

void check_t5(const Grid& g, bool, Sweep& s) {
    const PolyTable first(CauchyKind::first, g);
    for (int m = 0; m <= g.n_max; ++m)
        for (int k = 1; k <= g.k_max; ++k) {
            RatPolynomial lhs, rhs;
            for (int n = 0; n <= m; ++n) {
                lhs += mono(binom(m, n) / binom(n + k, n) * S2(n + k, k) * sgn(m - n), m - n);
                rhs += first.at(n, k) * S2(m, n);
            }
            s.compare("sum binom(m,n)/binom(n+k,n) S2(n+k,k)(-x)^(m-n) = sum C_n^(k)(x) S2(m,n)", P({{"m", m}, {"k", k}}), lhs, rhs);
        }
}

void check_t6(const Grid& g, bool, Sweep& s) {
    for (int n = 0; n <= g.n_max; ++n)
        for (int k = 1; k <= g.k_max; ++k) {
            Rational lhs(0), rhs(0);
            for (int m = 0; m <= n; ++m) {
                lhs += binom(n, m) / binom(k + m, m) * S2(k + m, k) * Q(-k).pow(n - m);
                rhs += cauchy_hi2(m, k) * S2(n, m);
            }
            s.compare("sum binom(n,m)/binom(k+m,m) S2(k+m,k)(-k)^(n-m) = sum Chat_m^(k) S2(n,m)", P({{"n", n}, {"k", k}}), lhs, rhs);
        }
}

void check_t8(const Grid& g, bool, Sweep& s) {
    const PolyTable second(CauchyKind::second, g);
    for (int m = 0; m <= g.n_max; ++m)
        for (int k = 1; k <= g.k_max; ++k) {
            RatPolynomial lhs, rhs;
            for (int n = 0; n <= m; ++n) {
                lhs += second.at(n, k) * S2(m, n);
                rhs += shifted_power(m - n, -k) * (S2(n + k, k) * binom(m, n) / binom(n + k, n));
            }
            s.compare("sum Chat_n^(k)(x) S2(m,n) = sum S2(n+k,k) binom(m,n)/binom(n+k,n) (x-k)^(m-n)", P({{"m", m}, {"k", k}}), lhs, rhs);
        }
}

void check_reciprocity(CauchyKind left_kind, const Grid& g, Sweep& s) {
    const PolyTable left(left_kind, g);
    const PolyTable right(left_kind == CauchyKind::first ? CauchyKind::second : CauchyKind::first, g);
    for (int n = 1; n <= g.n_max; ++n)
        for (int k = 1; k <= g.k_max; ++k) {
            const Params p = P({{"n", n}, {"k", k}});
            const RatPolynomial lhs = left.at(n, k) * (sgn(n) / fact(n));
            RatPolynomial from_one, from_zero;
            for (int m = 0; m <= n; ++m) {
                const RatPolynomial term = right.at(m, k) * (binom(n - 1, n - m) / fact(m));
                from_zero += term;
                if (m >= 1) from_one += term;
            }
            s.compare("(-1)^n P_n(x)/n! = sum_{m>=1} binom(n-1,n-m) Q_m(x)/m!", p, lhs, from_one);
            s.compare("m = 0 term vanishes", p, from_zero, from_one);
        }
}

void check_t9(const Grid& g, bool, Sweep& s) { check_reciprocity(CauchyKind::first, g, s); }
void check_t10(const Grid& g, bool, Sweep& s) { check_reciprocity(CauchyKind::second, g, s); }

void check_l11(const Grid& g, bool, Sweep& s) {
    const PolyTable first(CauchyKind::first, g);
    const PolyTable second(CauchyKind::second, g);
    for (int n = 0; n <= g.n_max; ++n)
        for (int k = 1; k <= g.k_max; ++k) {
            const Params p = P({{"n", n}, {"k", k}});
            const RatPolynomial lhs1 = n == 0 ? RatPolynomial() : first.at(n - 1, k) * Q(n);
            const RatPolynomial lhs2 = n == 0 ? RatPolynomial() : second.at(n - 1, k) * Q(n);
            s.compare("n C_{n-1}^(k)(x) = C_n^(k)(x-1) - C_n^(k)(x)", p, lhs1,
                      poly_shift(first.at(n, k), Q(-1)) - first.at(n, k));
            s.compare("n Chat_{n-1}^(k)(x) = Chat_n^(k)(x+1) - Chat_n^(k)(x)", p, lhs2,
                      poly_shift(second.at(n, k), Q(1)) - second.at(n, k));
        }
}

// sum_l sum_m binom(l,m)/binom(k+l-m,k) S2(k+l-m,k) S1(n,l) * sign * basis(m)
RatPolynomial expansion_first(int n, int k, bool corrected) {
    RatPolynomial out;
    for (int l = 0; l <= n; ++l)
        for (int m = 0; m <= l; ++m) {
            const Rational sign = corrected ? sgn(m) : sgn(k - m);
            out += mono(binom(l, m) / binom(k + l - m, k) * S2(k + l - m, k) * S1(n, l) * sign, m);
        }
    return out;
}

RatPolynomial expansion_second(int n, int k) {
    RatPolynomial out;
    for (int l = 0; l <= n; ++l)
        for (int m = 0; m <= l; ++m)
            out += shifted_power(m, -k) * (binom(l, m) / binom(k + l - m, k) * S2(k + l - m, k) * S1(n, l));
    return out;
}

void check_t12(const Grid& g, bool corrected, Sweep& s) {
    const PolyTable first(CauchyKind::first, g);
    const PolyTable second(CauchyKind::second, g);
    for (int n = 0; n <= g.n_max; ++n)
        for (int k = 1; k <= g.k_max; ++k) {
            const Params p = P({{"n", n}, {"k", k}});
            s.compare(corrected ? "C_n^(k)(x) = expansion with (-1)^m" : "C_n^(k)(x) = expansion with (-1)^(k-m)", p,
                      first.at(n, k), expansion_first(n, k, corrected));
            s.compare("Chat_n^(k)(x) = expansion in (x-k)^m", p, second.at(n, k), expansion_second(n, k));
        }
}

void check_t13(const Grid& g, bool corrected, Sweep& s) {
    if (g.n_max < 0) return;
    const int order = g.n_max + 1;
    const PolyTable second(CauchyKind::second, g);
    for (int k = 1; k <= g.k_max; ++k) {
        // Chat ~ ((t e^t/(e^t-1))^k, e^t - 1)
        const PowerSeries gk = ps_int_pow(ps_mul(exp_m1_over_t(order), ps_exp_linear(Q(-1), order)), -k);
        const PowerSeries fk = ps_exp_m1(order);
        for (int alpha = 1; alpha <= g.alpha_max; ++alpha) {
            // B^(alpha) ~ (((e^t-1)/t)^alpha, t)
            const PowerSeries h = ps_int_pow(exp_m1_over_t(order), alpha);
            const TriangularMatrix engine = connection_coeffs(gk, fk, h, PowerSeries::t(order), g.n_max);
            for (int n = 0; n <= g.n_max; ++n) {
                const Params p = P({{"n", n}, {"k", k}, {"alpha", alpha}});
                RatPolynomial resummed;
                for (int m = 0; m <= n; ++m) {
                    Rational closed(0);
                    for (int l = 0; l <= n - m; ++l)
                        closed += binom(n, l) * S1(n - l, m) * cauchy_hi_poly2(l, k + alpha, CauchyPolyMethod::triple_sum)(Q(alpha));
                    Params pm = p;
                    pm.emplace_back("m", std::to_string(m));
                    s.compare("closed-form C_{n,m} = connection coefficient", pm, closed,
                              engine[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)]);
                    resummed += bernoulli_hi_poly(corrected ? m : n, alpha) * closed;
                }
                s.compare(corrected ? "Chat_n^(k)(x) = sum_m C_{n,m} B_m^(alpha)(x)" : "Chat_n^(k)(x) = sum_m C_{n,m} B_n^(alpha)(x)", p,
                          second.at(n, k), resummed);
            }
        }
    }
}

void check_eq6(const Grid& g, bool, Sweep& s) {
    if (g.n_max < 0) return;
    const int order = g.n_max + 1;
    const PowerSeries log1p = ps_log1p(order);
    for (int p = 0; p <= g.n_max; ++p) {
        const PowerSeries power = ps_int_pow(log1p, p);
        for (int l = 0; l < order; ++l)
            s.compare("l! [t^l] log(1+t)^p = p! S1(l,p)", P({{"p", p}, {"l", l}}), egf_coeff(power, l), fact(p) * S1(l, p));
    }
}

void check_eq7(const Grid& g, bool, Sweep& s) {
    if (g.n_max < 0) return;
    const int order = g.n_max + 1;
    const PowerSeries em1 = ps_exp_m1(order);
    for (int p = 0; p <= g.n_max; ++p) {
        const PowerSeries power = ps_int_pow(em1, p);
        for (int l = 0; l < order; ++l)
            s.compare("l! [t^l] (e^t-1)^p = p! S2(l,p)", P({{"p", p}, {"l", l}}), egf_coeff(power, l), fact(p) * S2(l, p));
    }
}

void check_eq19(const Grid& g, bool, Sweep& s) {
    if (g.n_max < 0) return;
    const int order = g.n_max + 1;
    const PolySeries shift = ps_exp_scaled(X() - RatPolynomial::constant(1), ps_log1p(order));  // (1+t)^(x-1)
    for (int p = 0; p <= g.k_max + 1; ++p) {
        const PolySeries gf = mul_scalar_series(shift, ps_int_pow(named_series("cauchy1_gf", order), p));
        for (int j = 0; j <= g.n_max; ++j)
            s.compare("EGF coefficient of (t/log(1+t))^p (1+t)^(x-1) = B_j^(j-p+1)(x)", P({{"p", p}, {"j", j}}), egf_coeff(gf, j),
                      bernoulli_hi_poly(j, j - p + 1));
    }
}

void check_eq28(const Grid& g, bool, Sweep& s) {
    if (g.n_max < 0) return;
    const int order = g.n_max + 1;
    const PolySeries binom_x = ps_exp_scaled(X(), ps_log1p(order));  // (1+t)^x
    for (int k = 1; k <= g.k_max; ++k) {
        const PolySeries gf = mul_scalar_series(binom_x, ps_int_pow(named_series("cauchy1_gf", order), k));
        for (int n = 0; n <= g.n_max; ++n)
            s.compare("EGF coefficient of (t/log(1+t))^k (1+t)^x = B_n^(n-k+1)(x+1)", P({{"k", k}, {"n", n}}), egf_coeff(gf, n),
                      poly_shift(bernoulli_hi_poly(n, n - k + 1), Q(1)));
    }
}

void check_sheffer(CauchyKind kind, const Grid& g, Sweep& s) {
    if (g.n_max < 0) return;
    const int order = g.n_max + 1;
    const bool first = kind == CauchyKind::first;
    const PolyTable direct(kind, g);
    for (int k = 1; k <= g.k_max; ++k) {
        // first: ((t/(1-e^{-t}))^k, e^{-t}-1); second: ((t e^t/(e^t-1))^k, e^t-1)
        const PowerSeries gk = first ? ps_int_pow(one_minus_exp_neg_over_t(order), -k)
                                     : ps_int_pow(ps_mul(exp_m1_over_t(order), ps_exp_linear(Q(-1), order)), -k);
        const PowerSeries fk = first ? exp_neg_m1(order) : ps_exp_m1(order);
        const auto seq = sheffer_polys(gk, fk, g.n_max);
        for (int n = 0; n <= g.n_max; ++n)
            s.compare(first ? "Sheffer sequence = C_n^(k)(x)" : "Sheffer sequence = Chat_n^(k)(x)", P({{"k", k}, {"n", n}}),
                      seq[static_cast<std::size_t>(n)], direct.at(n, k));
    }
}

void check_eq52(const Grid& g, bool, Sweep& s) { check_sheffer(CauchyKind::first, g, s); }
void check_eq53(const Grid& g, bool, Sweep& s) { check_sheffer(CauchyKind::second, g, s); }

RatPolynomial signed_stirling_poly(int n) {  // sum (-1)^l S1(n,l) x^l
    RatPolynomial out;
    for (int l = 0; l <= n; ++l) out += mono(sgn(l) * S1(n, l), l);
    return out;
}

void check_eq58(const Grid& g, bool, Sweep& s) {
    if (g.n_max < 0) return;
    const int order = g.n_max + 1;
    const PolyTable first(CauchyKind::first, g);
    for (int n = 0; n <= g.n_max; ++n)
        for (int k = 1; k <= g.k_max; ++k) {
            const Params p = P({{"n", n}, {"k", k}});
            const RatPolynomial applied = apply_operator(ps_int_pow(one_minus_exp_neg_over_t(order), -k), first.at(n, k));
            const RatPolynomial rising = n % 2 == 0 ? rising_factorial(n) : -rising_factorial(n);
            s.compare("(t/(1-e^{-t}))^k C_n^(k)(x) = (-1)^n x^(n)", p, applied, rising);
            s.compare("(-1)^n x^(n) = sum (-1)^l S1(n,l) x^l", p, rising, signed_stirling_poly(n));
        }
}

void check_eq59_61(const Grid& g, bool corrected, Sweep& s) {
    if (g.n_max < 0) return;
    const int order = g.n_max + 1;
    const PolyTable first(CauchyKind::first, g);
    const PolyTable second(CauchyKind::second, g);
    for (int n = 0; n <= g.n_max; ++n)
        for (int k = 1; k <= g.k_max; ++k) {
            const Params p = P({{"n", n}, {"k", k}});
            s.compare("C_n^(k)(x) = ((1-e^{-t})/t)^k sum (-1)^l S1(n,l) x^l", p, first.at(n, k),
                      apply_operator(ps_int_pow(one_minus_exp_neg_over_t(order), k), signed_stirling_poly(n)));

            RatPolynomial falling_form;  // k!/(k+m)! (l)_m S2(k+m,k) S1(n,l) sign x^(l-m)
            for (int l = 0; l <= n; ++l)
                for (int m = 0; m <= l; ++m) {
                    const Rational sign = corrected ? sgn(l + m) : sgn(k + l + m);
                    falling_form += mono(fact(k) / fact(k + m) * (fact(l) / fact(l - m)) * S2(k + m, k) * S1(n, l) * sign, l - m);
                }
            s.compare(corrected ? "C_n^(k)(x) = falling-factorial form with (-1)^(l+m)" : "C_n^(k)(x) = falling-factorial form with (-1)^(k+l+m)",
                      p, first.at(n, k), falling_form);
            s.compare(corrected ? "C_n^(k)(x) = binomial form with (-1)^m" : "C_n^(k)(x) = binomial form with (-1)^(k-m)", p,
                      first.at(n, k), expansion_first(n, k, corrected));

            const PowerSeries op2 = ps_int_pow(ps_mul(exp_m1_over_t(order), ps_exp_linear(Q(-1), order)), k);
            s.compare("Chat_n^(k)(x) = ((e^t-1)/(t e^t))^k (x)_n", p, second.at(n, k), apply_operator(op2, falling_factorial(n)));
            RatPolynomial shifted_form;
            for (int l = 0; l <= n; ++l)
                for (int m = 0; m <= l; ++m)
                    shifted_form += shifted_power(l - m, -k) * (binom(l, m) / binom(m + k, m) * S2(k + m, k) * S1(n, l));
            s.compare("Chat_n^(k)(x) = sum binom(l,m)/binom(m+k,m) S2(k+m,k) S1(n,l) (x-k)^(l-m)", p, second.at(n, k), shifted_form);
            s.compare("Chat_n^(k)(x) = sum binom(l,m)/binom(k+l-m,k) S2(k+l-m,k) S1(n,l) (x-k)^m", p, second.at(n, k),
                      expansion_second(n, k));
        }
}

void check_polyc_oracle(const Grid& g, bool, Sweep& s) {
    for (int n = 0; n <= g.n_max; ++n)
        for (int k = 1; k <= g.k_max; ++k) {
            const RatPolynomial ff = falling_factorial(n);
            const Params p = P({{"n", n}, {"k", k}});
            Rational unsigned_first(0), unsigned_second(0);
            for (int m = 0; m <= n; ++m) {
                const Rational c(stirling1_unsigned(n, m));
                unsigned_first += c * sgn(m) / Q(m + 1).pow(k);
                unsigned_second += c / Q(m + 1).pow(k);
            }
            const Rational oracle1 = product_cube_integrate(ff, k);
            const Rational oracle2 = product_cube_integrate(poly_reflect(ff), k);
            s.compare("poly-Cauchy first kind = cube integral", p, poly_cauchy1(n, k), oracle1);
            s.compare("(-1)^n sum [n m] (-1)^m/(m+1)^k = cube integral", p, unsigned_first * sgn(n), oracle1);
            s.compare("poly-Cauchy second kind = cube integral", p, poly_cauchy2(n, k), oracle2);
            s.compare("(-1)^n sum [n m]/(m+1)^k = cube integral", p, unsigned_second * sgn(n), oracle2);
            for (const Rational& z : g.x_samples) {
                Params pz = p;
                pz.emplace_back("z", z.to_string());
                s.compare("poly-Cauchy polynomial first kind = cube integral of (x1...xk - z)_n", pz, poly_cauchy_poly1(n, k, z),
                          product_cube_integrate(poly_shift(ff, -z), k));
                s.compare("poly-Cauchy polynomial second kind = cube integral of (z - x1...xk)_n", pz, poly_cauchy_poly2(n, k, z),
                          product_cube_integrate(poly_reflect(poly_shift(ff, z)), k));
            }
        }
}

using CheckFn = void (*)(const Grid&, bool, Sweep&);

struct CheckSpec {
    CheckFn run;
    std::string_view correction;  // empty when the check has no corrected reading
};

CheckSpec spec_for(CheckId id) {
    switch (id) {
    case CheckId::T1: return {check_t1, {}};
    case CheckId::T2: return {check_t2, {}};
    case CheckId::T3: return {check_t3, {}};
    case CheckId::T4: return {check_t4, {}};
    case CheckId::T5: return {check_t5, {}};
    case CheckId::T6: return {check_t6, {}};
    case CheckId::T7: return {check_t7, {}};
    case CheckId::T8: return {check_t8, {}};
    case CheckId::T9: return {check_t9, {}};
    case CheckId::T10: return {check_t10, {}};
    case CheckId::T12: return {check_t12, kTagSpuriousSign};
    case CheckId::T13: return {check_t13, kTagBasisIndex};
    case CheckId::L11: return {check_l11, {}};
    case CheckId::EQ6: return {check_eq6, {}};
    case CheckId::EQ7: return {check_eq7, {}};
    case CheckId::EQ19: return {check_eq19, {}};
    case CheckId::EQ28: return {check_eq28, {}};
    case CheckId::EQ52: return {check_eq52, {}};
    case CheckId::EQ53: return {check_eq53, {}};
    case CheckId::EQ58: return {check_eq58, {}};
    case CheckId::EQ59_61: return {check_eq59_61, kTagSpuriousSign};
    case CheckId::POLYC_ORACLE: return {check_polyc_oracle, kTagPolyCauchySign};
    }
    throw std::invalid_argument("unknown check id");
}

}  // namespace

const std::vector<CheckId>& all_check_ids() {
    static const std::vector<CheckId> ids = [] {
        std::vector<CheckId> out;
        for (const auto& n : kNames) out.push_back(n.id);
        return out;
    }();
    return ids;
}

std::string_view to_string(CheckId id) {
    for (const auto& n : kNames)
        if (n.id == id) return n.name;
    return "?";
}

CheckId parse_check_id(std::string_view name) {
    for (const auto& n : kNames)
        if (n.name == name) return n.id;
    throw std::invalid_argument("unknown check id '" + std::string(name) + "'");
}

std::string_view to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::pass_with_correction: return "pass_with_correction";
    }
    return "?";
}

const std::vector<CorrectedReading>& corrected_readings() {
    static const std::vector<CorrectedReading> readings{
        {std::string(kTagBasisIndex), "basis polynomial B_n^(alpha)(x) read as B_m^(alpha)(x) under the summation index m", true},
        {std::string(kTagPolyCauchySign), "poly-Cauchy second-kind sign convention taken from the cube-integral oracle", true},
        {std::string(kTagIntegrandIndex), "poly-Cauchy polynomial integrand (.)_m read with index n", true},
        {std::string(kTagSpuriousSign), "explicit first-kind expansion: sign (-1)^(k-m) read as (-1)^m (and (-1)^(k+l+m) as (-1)^(l+m))", false},
    };
    return readings;
}

TheoremReport verify(CheckId id, const Grid& grid) {
    const CheckSpec spec = spec_for(id);
    TheoremReport report;
    report.id = id;
    report.grid = grid;

    Sweep printed;
    spec.run(grid, false, printed);
    report.cases_checked = printed.cases();
    report.vacuous = printed.cases() == 0;
    if (id == CheckId::POLYC_ORACLE)
        report.notes.emplace_back(std::string(kTagIntegrandIndex) + ": defining integrand evaluated with index n");

    if (printed.failures() == 0) {
        report.status = CheckStatus::pass;
        return report;
    }
    report.counterexamples = printed.examples();
    if (spec.correction.empty()) {
        report.status = CheckStatus::fail;
        return report;
    }
    Sweep corrected;
    spec.run(grid, true, corrected);
    report.corrected_reading = std::string(spec.correction);
    report.notes.push_back("printed form failed " + std::to_string(printed.failures()) + " of " + std::to_string(printed.cases()) + " cases");
    report.corrected_counterexamples = corrected.examples();
    report.status = corrected.failures() == 0 ? CheckStatus::pass_with_correction : CheckStatus::fail;
    return report;
}

std::vector<TheoremReport> run_suite(const SuiteConfig& config) {
    std::vector<CheckId> selected;
    for (CheckId id : all_check_ids())
        if (config.checks.empty() || std::find(config.checks.begin(), config.checks.end(), id) != config.checks.end())
            selected.push_back(id);

    std::vector<TheoremReport> reports;
    reports.reserve(selected.size());
    if (!config.parallel) {
        for (CheckId id : selected) reports.push_back(verify(id, config.grid));
        return reports;
    }
    std::vector<std::future<TheoremReport>> pending;
    pending.reserve(selected.size());
    for (CheckId id : selected) pending.push_back(std::async(std::launch::async, [id, &config] { return verify(id, config.grid); }));
    for (auto& f : pending) reports.push_back(f.get());
    return reports;
}

bool any_failed(const std::vector<TheoremReport>& reports) {
    return std::any_of(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.status == CheckStatus::fail; });
}

namespace {

using ojson = nlohmann::ordered_json;

ojson to_json(const Counterexample& c) {
    ojson params = ojson::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    return ojson{{"relation", c.relation}, {"params", params}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

ojson to_json(const Grid& g) {
    ojson xs = ojson::array();
    for (const auto& x : g.x_samples) xs.push_back(x.to_string());
    return ojson{{"n_max", g.n_max}, {"k_max", g.k_max}, {"alpha_max", g.alpha_max}, {"x_samples", xs}};
}

ojson to_json(const TheoremReport& r) {
    ojson j;
    j["id"] = std::string(to_string(r.id));
    j["grid"] = to_json(r.grid);
    j["status"] = std::string(to_string(r.status));
    j["cases_checked"] = r.cases_checked;
    j["vacuous"] = r.vacuous;
    j["counterexamples"] = ojson::array();
    for (const auto& c : r.counterexamples) j["counterexamples"].push_back(to_json(c));
    if (r.corrected_reading) {
        j["corrected_reading"] = *r.corrected_reading;
        j["corrected_counterexamples"] = ojson::array();
        for (const auto& c : r.corrected_counterexamples) j["corrected_counterexamples"].push_back(to_json(c));
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

}  // namespace

std::string reports_to_json(const std::vector<TheoremReport>& reports, int indent) {
    ojson arr = ojson::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(indent);
}

std::string reports_to_text(const std::vector<TheoremReport>& reports) {
    std::ostringstream out;
    out << "id            status                 cases  reading\n";
    for (const auto& r : reports) {
        std::string id(to_string(r.id));
        std::string status(to_string(r.status));
        if (r.vacuous) status += " (vacuous)";
        id.resize(std::max<std::size_t>(id.size(), 13), ' ');
        status.resize(std::max<std::size_t>(status.size(), 22), ' ');
        std::string cases = std::to_string(r.cases_checked);
        cases.insert(0, cases.size() < 5 ? 5 - cases.size() : 0, ' ');
        out << id << ' ' << status << ' ' << cases << "  " << r.corrected_reading.value_or("-") << '\n';
        const auto show = [&out](const char* label, const std::vector<Counterexample>& list) {
            for (const auto& c : list) {
                out << "    " << label << ": " << c.relation << " at";
                for (const auto& [k, v] : c.params) out << ' ' << k << '=' << v;
                out << "\n      lhs = " << c.lhs << "\n      rhs = " << c.rhs << '\n';
            }
        };
        show(r.corrected_reading ? "printed form" : "counterexample", r.counterexamples);
        show("corrected form", r.corrected_counterexamples);
    }
    return out.str();
}

std::string reports_to_csv(const std::vector<TheoremReport>& reports) {
    std::ostringstream out;
    out << "id,status,cases_checked,vacuous,corrected_reading,printed_failures_shown\n";
    for (const auto& r : reports)
        out << to_string(r.id) << ',' << to_string(r.status) << ',' << r.cases_checked << ',' << (r.vacuous ? "true" : "false") << ','
            << r.corrected_reading.value_or("") << ',' << r.counterexamples.size() << '\n';
    return out.str();
}

}  // namespace hocauchy
