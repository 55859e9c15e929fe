#include "hocauchy/series.hpp"

#include <charconv>

namespace hocauchy {

PowerSeries ps_derivative(const PowerSeries& f) {
    if (f.order() == 1) return PowerSeries(1);
    PowerSeries d(f.order() - 1);
    for (int j = 1; j < f.order(); ++j) d[j - 1] = f[j] * Rational(j);
    return d;
}

PowerSeries ps_log1p(int order) {
    PowerSeries s(order);
    for (int j = 1; j < order; ++j) s[j] = Rational(j % 2 == 1 ? 1 : -1, j);
    return s;
}

PowerSeries ps_exp_m1(int order) {
    PowerSeries s = ps_exp_linear(Rational(1), order);
    s[0] = Rational(0);
    return s;
}

PowerSeries ps_exp_linear(const Rational& c, int order) {
    PowerSeries s(order);
    Rational term(1);
    for (int j = 0; j < order; ++j) {
        s[j] = term;
        term = term * c / Rational(j + 1);
    }
    return s;
}

PowerSeries ps_revert(const PowerSeries& f) {
    const int n = f.order();
    if (!f[0].is_zero() || n < 2 || f[1].is_zero()) throw std::domain_error("not a delta series");

    PowerSeries g = PowerSeries::t(2).scaled(f[1].inverse());
    int prec = 2;
    while (prec < n) {
        prec = std::min(2 * prec, n);
        const PowerSeries fp = f.truncated(prec);
        const PowerSeries gp(g.coeffs(), prec);
        // g <- g - (f(g) - t) / f'(g); f' loses one order, padded with zero
        // (that term only meets t^prec and above)
        const PowerSeries residual = ps_compose(fp, gp) - PowerSeries::t(prec);
        const PowerSeries slope = ps_compose(PowerSeries(ps_derivative(fp).coeffs(), prec), gp);
        g = gp - ps_div(residual, slope);
    }
    return g;
}

PolySeries ps_exp_scaled(const RatPolynomial& y, const PowerSeries& f) {
    std::vector<RatPolynomial> c;
    c.reserve(static_cast<std::size_t>(f.order()));
    for (const auto& a : f.coeffs()) c.push_back(y * a);
    return ps_exp(PolySeries(std::move(c)));
}

RatPolynomial apply_operator(const PowerSeries& f, const RatPolynomial& p) {
    if (p.degree() >= f.order()) throw std::out_of_range("insufficient truncation");
    RatPolynomial result;
    RatPolynomial deriv = p;
    for (int j = 0; j < f.order() && !deriv.is_zero(); ++j) {
        result += deriv * f[j];
        deriv = poly_derivative(deriv);
    }
    return result;
}

std::vector<RatPolynomial> sheffer_polys(const PowerSeries& g, const PowerSeries& f, int n_max) {
    if (n_max < 0) return {};
    const int order = n_max + 1;
    if (g.order() < order || f.order() < order) throw std::out_of_range("insufficient truncation");
    if (g[0].is_zero()) throw std::domain_error("non-unit divisor");
    if (order == 1) return {RatPolynomial::constant(g[0].inverse())};

    const PowerSeries fbar = ps_revert(f.truncated(order));
    const PowerSeries weight = ps_inverse(ps_compose(g.truncated(order), fbar));
    const PolySeries gf = mul_scalar_series(ps_exp_scaled(RatPolynomial::identity(), fbar), weight);

    std::vector<RatPolynomial> out;
    out.reserve(static_cast<std::size_t>(order));
    for (int n = 0; n <= n_max; ++n) out.push_back(egf_coeff(gf, n));
    return out;
}

TriangularMatrix connection_coeffs(const PowerSeries& g, const PowerSeries& f, const PowerSeries& h,
                                   const PowerSeries& l, int n_max) {
    if (n_max < 0) return {};
    const int order = n_max + 1;
    for (const PowerSeries* s : {&g, &f, &h, &l})
        if (s->order() < order) throw std::out_of_range("insufficient truncation");
    if (g[0].is_zero() || h[0].is_zero()) throw std::domain_error("non-unit divisor");

    TriangularMatrix out(static_cast<std::size_t>(order));
    if (order == 1) {
        out[0].push_back(h[0] / g[0]);
        return out;
    }
    const PowerSeries fbar = ps_revert(f.truncated(order));
    if (l[0] != 0 || l[1].is_zero()) throw std::domain_error("not a delta series");
    const PowerSeries base = ps_div(ps_compose(h.truncated(order), fbar), ps_compose(g.truncated(order), fbar));
    const PowerSeries inner = ps_compose(l.truncated(order), fbar);

    PowerSeries power = PowerSeries::one(order);  // l(fbar)^m
    for (int m = 0; m <= n_max; ++m) {
        const PowerSeries term = base * power;
        const Rational inv_mfact = Rational(factorial(m)).inverse();
        for (int n = m; n <= n_max; ++n) {
            auto& row = out[static_cast<std::size_t>(n)];
            if (row.empty()) row.resize(static_cast<std::size_t>(n) + 1);
            row[static_cast<std::size_t>(m)] = egf_coeff(term, n) * inv_mfact;
        }
        power *= inner;
    }
    return out;
}

namespace {

PowerSeries bernoulli_gf(long alpha, int order) {
    // (e^t - 1)/t is a unit; compute it one order deeper before shifting
    PowerSeries em1 = ps_exp_m1(order + 1);
    PowerSeries shifted(order);
    for (int j = 0; j < order; ++j) shifted[j] = em1[j + 1];
    return ps_int_pow(shifted, -alpha);
}

}  // namespace

const std::vector<std::string>& series_registry() {
    static const std::vector<std::string> names{"log1p", "exp_m1", "cauchy1_gf", "cauchy2_gf", "bernoulli_gf(a)"};
    return names;
}

PowerSeries named_series(std::string_view name, int order, std::optional<long> alpha) {
    if (order < 1) throw std::invalid_argument("series order must be positive");
    if (name == "log1p") return ps_log1p(order);
    if (name == "exp_m1") return ps_exp_m1(order);
    if (name == "cauchy1_gf") return ps_div(PowerSeries::t(order + 1), ps_log1p(order + 1));
    if (name == "cauchy2_gf") {
        const PowerSeries one_plus_t({Rational(1), Rational(1)}, order + 1);
        return ps_div(PowerSeries::t(order + 1), one_plus_t * ps_log1p(order + 1));
    }
    constexpr std::string_view bern = "bernoulli_gf";
    if (name.starts_with(bern)) {
        std::string_view rest = name.substr(bern.size());
        if (rest.empty()) {
            if (!alpha) throw std::invalid_argument("bernoulli_gf needs an order alpha");
            return bernoulli_gf(*alpha, order);
        }
        if (rest.size() >= 3 && rest.front() == '(' && rest.back() == ')') {
            rest = rest.substr(1, rest.size() - 2);
            long a = 0;
            const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), a);
            if (ec == std::errc() && ptr == rest.data() + rest.size()) return bernoulli_gf(a, order);
        }
    }
    std::string msg = "unknown series '" + std::string(name) + "'; registered:";
    for (const auto& n : series_registry()) msg += " " + n;
    throw std::invalid_argument(msg);
}

}  // namespace hocauchy
