#ifndef HOCAUCHY_SERIES_HPP
#define HOCAUCHY_SERIES_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "hocauchy/polynomial.hpp"
#include "hocauchy/rational.hpp"

namespace hocauchy {

/// Exact commutative-ring contract used by Series<R>. Each instantiation
/// provides zero/one, a zero test, scaling by a Rational, and the inverse of
/// a unit (std::nullopt for non-units).
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static Rational scale(const Rational& a, const Rational& s) { return a * s; }
    static std::optional<Rational> unit_inverse(const Rational& a) {
        if (a.is_zero()) return std::nullopt;
        return a.inverse();
    }
};

template <>
struct RingTraits<RatPolynomial> {
    static RatPolynomial zero() { return {}; }
    static RatPolynomial one() { return RatPolynomial::constant(1); }
    static bool is_zero(const RatPolynomial& a) { return a.is_zero(); }
    static RatPolynomial scale(const RatPolynomial& a, const Rational& s) { return a * s; }
    // only nonzero constants are units in Q[x]
    static std::optional<RatPolynomial> unit_inverse(const RatPolynomial& a) {
        if (a.degree() != 0) return std::nullopt;
        return RatPolynomial::constant(a.coeff(0).inverse());
    }
};

/// Formal power series truncated at t^order. Exactly `order` coefficients are
/// stored (trailing zeros included); binary operations work at the smaller
/// of the two operand orders.
template <class R>
class Series {
public:
    using Traits = RingTraits<R>;

    explicit Series(int order) : coeffs_(checked_order(order), Traits::zero()) {}
    explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series order must be positive");
    }
    /// Pads or truncates `coeffs` to exactly `order` terms.
    Series(std::vector<R> coeffs, int order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(checked_order(order), Traits::zero());
    }

    static Series one(int order) { return constant(Traits::one(), order); }
    static Series constant(const R& c, int order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }
    /// The series t (order 1 gives the zero series).
    static Series t(int order) {
        Series s(order);
        if (order > 1) s.coeffs_[1] = Traits::one();
        return s;
    }

    [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()); }
    [[nodiscard]] const std::vector<R>& coeffs() const { return coeffs_; }
    [[nodiscard]] const R& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    R& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

    /// Index of the first nonzero coefficient; order() for the zero series.
    [[nodiscard]] int valuation() const {
        for (int i = 0; i < order(); ++i)
            if (!Traits::is_zero(coeffs_[static_cast<std::size_t>(i)])) return i;
        return order();
    }
    [[nodiscard]] bool is_zero() const { return valuation() == order(); }

    [[nodiscard]] Series truncated(int order) const {
        if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
        return Series(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order));
    }

    Series& operator+=(const Series& rhs) {
        resize_to(std::min(order(), rhs.order()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }
    Series& operator-=(const Series& rhs) {
        resize_to(std::min(order(), rhs.order()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator-() const {
        Series r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Series operator*(const Series& a, const Series& b) {
        const int n = std::min(a.order(), b.order());
        Series out(n);
        for (int i = 0; i < n; ++i) {
            const R& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (Traits::is_zero(ai)) continue;
            for (int j = 0; i + j < n; ++j)
                out.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
        }
        return out;
    }
    Series& operator*=(const Series& rhs) { return *this = *this * rhs; }

    [[nodiscard]] Series scaled(const Rational& s) const {
        Series r = *this;
        for (auto& c : r.coeffs_) c = Traits::scale(c, s);
        return r;
    }

    friend bool operator==(const Series&, const Series&) = default;

private:
    static std::size_t checked_order(int order) {
        if (order < 1) throw std::invalid_argument("series order must be positive");
        return static_cast<std::size_t>(order);
    }
    void resize_to(int order) { coeffs_.resize(static_cast<std::size_t>(order)); }

    std::vector<R> coeffs_;
};

using PowerSeries = Series<Rational>;
using PolySeries = Series<RatPolynomial>;

/// Coefficient ring R lifted from Rational (identity for R = Rational).
template <class R>
R lift_scalar(const Rational& c) {
    return RingTraits<R>::scale(RingTraits<R>::one(), c);
}

template <class R>
Series<R> lift(const PowerSeries& f) {
    if constexpr (std::is_same_v<R, Rational>) {
        return f;
    } else {
        std::vector<R> c;
        c.reserve(static_cast<std::size_t>(f.order()));
        for (const auto& a : f.coeffs()) c.push_back(lift_scalar<R>(a));
        return Series<R>(std::move(c));
    }
}

/// f * g where g has plain Rational coefficients.
template <class R>
Series<R> mul_scalar_series(const Series<R>& f, const PowerSeries& g) {
    const int n = std::min(f.order(), g.order());
    Series<R> out(n);
    for (int j = 0; j < n; ++j) {
        if (g[j].is_zero()) continue;
        for (int i = 0; i + j < n; ++i) out[i + j] += RingTraits<R>::scale(f[i], g[j]);
    }
    return out;
}

template <class R>
Series<R> ps_mul(const Series<R>& f, const Series<R>& g) {
    return f * g;
}

/// h with h * g = f. A common leading power t^m of f and g is cancelled
/// first (the result then has order min(order) - m); the remaining divisor
/// must have a unit constant term.
template <class R>
Series<R> ps_div(const Series<R>& f, const Series<R>& g) {
    using T = RingTraits<R>;
    if (g.is_zero()) throw std::domain_error("division by zero series");
    const int shift = std::min(f.valuation(), g.valuation());
    const int n = std::min(f.order(), g.order()) - shift;
    if (n < 1) throw std::domain_error("insufficient truncation after t-power cancellation");
    const auto inv = T::unit_inverse(g[shift]);
    if (!inv) throw std::domain_error("non-unit divisor");
    Series<R> h(n);
    for (int i = 0; i < n; ++i) {
        R acc = f[i + shift];
        for (int j = 1; j <= i; ++j) acc -= g[j + shift] * h[i - j];
        h[i] = acc * *inv;
    }
    return h;
}

template <class R>
Series<R> ps_inverse(const Series<R>& g) {
    return ps_div(Series<R>::one(g.order()), g);
}

/// f^e; e < 0 requires a unit constant term.
template <class R>
Series<R> ps_int_pow(const Series<R>& f, long e) {
    if (e < 0) {
        if (!RingTraits<R>::unit_inverse(f[0])) throw std::domain_error("non-unit base");
        return ps_int_pow(ps_inverse(f), -e);
    }
    Series<R> result = Series<R>::one(f.order());
    Series<R> base = f;
    auto k = static_cast<unsigned long>(e);
    while (k != 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k != 0) base *= base;
    }
    return result;
}

/// exp(f) for f(0) = 0, from h' = f' h: n h_n = sum_{k=1..n} k f_k h_{n-k}.
template <class R>
Series<R> ps_exp(const Series<R>& f) {
    if (!RingTraits<R>::is_zero(f[0])) throw std::domain_error("exp needs zero constant term");
    const int n = f.order();
    Series<R> h(n);
    h[0] = RingTraits<R>::one();
    for (int m = 1; m < n; ++m) {
        R acc = RingTraits<R>::zero();
        for (int k = 1; k <= m; ++k) {
            if (RingTraits<R>::is_zero(f[k])) continue;
            acc += RingTraits<R>::scale(f[k] * h[m - k], Rational(k));
        }
        h[m] = RingTraits<R>::scale(acc, Rational(1, m));
    }
    return h;
}

/// f(g(t)) by Horner's scheme; g(0) must vanish.
template <class R>
Series<R> ps_compose(const Series<R>& f, const PowerSeries& g) {
    if (!g[0].is_zero()) throw std::domain_error("composition needs zero constant term");
    const int n = std::min(f.order(), g.order());
    Series<R> acc = Series<R>::constant(f[n - 1], n);
    const PowerSeries inner = g.truncated(n);
    for (int j = n - 2; j >= 0; --j) {
        acc = mul_scalar_series(acc, inner);
        acc[0] += f[j];
    }
    return acc;
}

/// n! [t^n] f.
template <class R>
R egf_coeff(const Series<R>& f, int n) {
    if (n < 0) throw std::invalid_argument("negative coefficient index");
    if (n >= f.order()) throw std::out_of_range("insufficient truncation");
    return RingTraits<R>::scale(f[n], Rational(factorial(n)));
}

/// Formal derivative; the result has order f.order() - 1 (at least 1).
PowerSeries ps_derivative(const PowerSeries& f);

/// log(1+t) = sum (-1)^(j-1) t^j / j.
PowerSeries ps_log1p(int order);
/// e^t - 1.
PowerSeries ps_exp_m1(int order);
/// e^(c t).
PowerSeries ps_exp_linear(const Rational& c, int order);

/// Compositional inverse of a delta series, by Newton iteration with
/// precision doubling.
PowerSeries ps_revert(const PowerSeries& f);

/// exp(y * f(t)) with a polynomial multiplier y (usually a degree-1
/// polynomial in x); f(0) must vanish. (1+t)^(x+c) is
/// ps_exp_scaled(x + c, log1p).
PolySeries ps_exp_scaled(const RatPolynomial& y, const PowerSeries& f);

/// Applies f(D), D = d/dx, to p: sum_j f_j p^(j). Requires order > deg p.
RatPolynomial apply_operator(const PowerSeries& f, const RatPolynomial& p);

/// Sheffer sequence for (g, f): S_n(y) = n! [t^n] e^(y fbar(t)) / g(fbar(t)).
std::vector<RatPolynomial> sheffer_polys(const PowerSeries& g, const PowerSeries& f, int n_max);

/// Lower-triangular matrix; row n holds entries m = 0..n.
using TriangularMatrix = std::vector<std::vector<Rational>>;

/// C[n][m] with s_n = sum_m C[n][m] q_m for s ~ (g, f), q ~ (h, l):
/// C[n][m] = (n!/m!) [t^n] h(fbar)/g(fbar) * l(fbar)^m.
TriangularMatrix connection_coeffs(const PowerSeries& g, const PowerSeries& f, const PowerSeries& h,
                                   const PowerSeries& l, int n_max);

/// Named series: "log1p", "exp_m1", "cauchy1_gf" (t/log(1+t)),
/// "cauchy2_gf" (t/((1+t)log(1+t))), "bernoulli_gf(a)" ((t/(e^t-1))^a).
/// `alpha` supplies a for a bare "bernoulli_gf". Throws std::invalid_argument
/// listing the registry on unknown names.
PowerSeries named_series(std::string_view name, int order, std::optional<long> alpha = std::nullopt);
const std::vector<std::string>& series_registry();

}  // namespace hocauchy

#endif  // HOCAUCHY_SERIES_HPP
