#include "hocauchy/cauchy.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hocauchy/bernoulli.hpp"
#include "hocauchy/series.hpp"
#include "hocauchy/stirling.hpp"

namespace hocauchy {

std::string_view to_string(CauchyMethod m) {
    switch (m) {
    case CauchyMethod::stirling_sum: return "stirling_sum";
    case CauchyMethod::convolution: return "convolution";
    case CauchyMethod::gf_coeff: return "gf_coeff";
    case CauchyMethod::bernoulli_bridge: return "bernoulli_bridge";
    case CauchyMethod::integral_oracle: return "integral_oracle";
    }
    return "?";
}

std::string_view to_string(CauchyPolyMethod m) {
    switch (m) {
    case CauchyPolyMethod::triple_sum: return "triple_sum";
    case CauchyPolyMethod::bernoulli_bridge: return "bernoulli_bridge";
    case CauchyPolyMethod::gf_coeff: return "gf_coeff";
    case CauchyPolyMethod::integral_oracle: return "integral_oracle";
    }
    return "?";
}

namespace {

void require_n(int n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
}

void require_k(int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
}

Rational sign(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

// classical numbers, index -> value; the convolution route reads these a lot
class ClassicalCache {
public:
    Rational get(CauchyKind kind, int n) {
        std::lock_guard lock(mutex_);
        auto& values = kind == CauchyKind::first ? first_ : second_;
        while (static_cast<int>(values.size()) <= n) {
            const long m = static_cast<long>(values.size());
            Rational sum(0);
            for (long l = 0; l <= m; ++l) {
                Rational term = Rational(stirling1_signed(m, l)) / Rational(l + 1);
                if (kind == CauchyKind::second) term *= sign(l);
                sum += term;
            }
            values.push_back(sum);
        }
        return values[static_cast<std::size_t>(n)];
    }

private:
    std::mutex mutex_;
    std::vector<Rational> first_;
    std::vector<Rational> second_;
};

ClassicalCache& classical() {
    static ClassicalCache cache;
    return cache;
}

Rational stirling_sum(CauchyKind kind, int n, int k) {
    Rational total(0);
    for (int l = 0; l <= n; ++l) {
        Rational term = Rational(stirling1_signed(n, l)) * cube_moment(l, k);
        if (kind == CauchyKind::second) term *= sign(l);
        total += term;
    }
    return total;
}

Rational convolution(CauchyKind kind, int n, int k) {
    Rational total(0);
    for (const auto& parts : compositions(n, k)) {
        Rational product(multinomial(n, parts));
        for (int l : parts) product *= classical().get(kind, l);
        total += product;
    }
    return total;
}

PowerSeries hi_gf(CauchyKind kind, int k, int order) {
    return ps_int_pow(named_series(kind == CauchyKind::first ? "cauchy1_gf" : "cauchy2_gf", order), k);
}

// integrand (s - x)_n or (x - s)_n as a polynomial in s
RatPolynomial oracle_integrand(CauchyKind kind, int n, const Rational& x) {
    const RatPolynomial ff = falling_factorial(n);
    return kind == CauchyKind::first ? poly_shift(ff, -x) : poly_reflect(poly_shift(ff, x));
}

Rational hi_number(CauchyKind kind, int n, int k, CauchyMethod method) {
    require_n(n);
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (k == 0) {
        if (method == CauchyMethod::integral_oracle) throw std::invalid_argument("integral oracle needs k >= 1");
        return n == 0 ? Rational(1) : Rational(0);
    }
    switch (method) {
    case CauchyMethod::stirling_sum: return stirling_sum(kind, n, k);
    case CauchyMethod::convolution: return convolution(kind, n, k);
    case CauchyMethod::gf_coeff: return egf_coeff(hi_gf(kind, k, n + 1), n);
    case CauchyMethod::bernoulli_bridge: {
        const RatPolynomial b = bernoulli_hi_poly(n, static_cast<long>(n) - k + 1);
        return b(kind == CauchyKind::first ? Rational(1) : Rational(1 - k));
    }
    case CauchyMethod::integral_oracle: return cube_integrate(oracle_integrand(kind, n, Rational(0)), k);
    }
    throw std::invalid_argument("unknown method");
}

RatPolynomial triple_sum(CauchyKind kind, int n, int k) {
    // first:  sum_l sum_j binom(l,j) s(n,l) (-x)^(l-j) M_k(j)
    // second: sum_l sum_i binom(l,i) s(n,l) x^(l-i) (-1)^i M_k(i)
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int l = 0; l <= n; ++l) {
        const Rational s(stirling1_signed(n, l));
        if (s.is_zero()) continue;
        for (int j = 0; j <= l; ++j) {
            Rational term = s * Rational(binomial(l, j)) * cube_moment(j, k);
            term *= kind == CauchyKind::first ? sign(l - j) : sign(j);
            c[static_cast<std::size_t>(l - j)] += term;
        }
    }
    return RatPolynomial(std::move(c));
}

RatPolynomial hi_poly(CauchyKind kind, int n, int k, CauchyPolyMethod method) {
    require_n(n);
    require_k(k);
    switch (method) {
    case CauchyPolyMethod::triple_sum: return triple_sum(kind, n, k);
    case CauchyPolyMethod::bernoulli_bridge: {
        const RatPolynomial b = bernoulli_hi_poly(n, static_cast<long>(n) - k + 1);
        // first kind: B(1 - x); second kind: B(x - k + 1)
        return kind == CauchyKind::first ? poly_reflect(poly_shift(b, Rational(1))) : poly_shift(b, Rational(1 - k));
    }
    case CauchyPolyMethod::gf_coeff: {
        const int order = n + 1;
        const PowerSeries base = hi_gf(kind, k, order);
        const RatPolynomial exponent = kind == CauchyKind::first ? -RatPolynomial::identity() : RatPolynomial::identity();
        const PolySeries gf = mul_scalar_series(ps_exp_scaled(exponent, ps_log1p(order)), base);
        return egf_coeff(gf, n);
    }
    case CauchyPolyMethod::integral_oracle: {
        std::vector<Rational> xs;
        std::vector<Rational> ys;
        for (int i = 0; i <= n; ++i) {
            xs.emplace_back(i);
            ys.push_back(cauchy_hi_poly_oracle_at(kind, n, k, Rational(i)));
        }
        return interpolate(xs, ys);
    }
    }
    throw std::invalid_argument("unknown method");
}

RatPolynomial checked_poly(CauchyKind kind, int n, int k) {
    RatPolynomial sum = hi_poly(kind, n, k, CauchyPolyMethod::triple_sum);
    if (sum != hi_poly(kind, n, k, CauchyPolyMethod::bernoulli_bridge))
        throw std::logic_error("triple sum and Bernoulli bridge disagree");
    return sum;
}

}  // namespace

Rational cauchy1(int n) {
    require_n(n);
    return classical().get(CauchyKind::first, n);
}

Rational cauchy2(int n) {
    require_n(n);
    return classical().get(CauchyKind::second, n);
}

Rational poly_cauchy1(int n, int k) {
    require_n(n);
    require_k(k);
    Rational total(0);
    for (long m = 0; m <= n; ++m) total += Rational(stirling1_signed(n, m)) / Rational(m + 1).pow(k);
    return total;
}

Rational poly_cauchy2(int n, int k) {
    require_n(n);
    require_k(k);
    Rational total(0);
    for (long m = 0; m <= n; ++m) total += Rational(stirling1_unsigned(n, m)) / Rational(m + 1).pow(k);
    return sign(n) * total;
}

namespace {

// sum_i binom(m,i) (-z)^i / (m-i+1)^k
Rational inner_poly_sum(long m, int k, const Rational& z) {
    Rational total(0);
    Rational zpow(1);
    for (long i = 0; i <= m; ++i) {
        total += Rational(binomial(m, i)) * zpow / Rational(m - i + 1).pow(k);
        zpow *= -z;
    }
    return total;
}

}  // namespace

Rational poly_cauchy_poly1(int n, int k, const Rational& z) {
    require_n(n);
    require_k(k);
    Rational total(0);
    for (long m = 0; m <= n; ++m)
        total += Rational(stirling1_unsigned(n, m)) * sign(n - m) * inner_poly_sum(m, k, z);
    return total;
}

Rational poly_cauchy_poly2(int n, int k, const Rational& z) {
    require_n(n);
    require_k(k);
    Rational total(0);
    for (long m = 0; m <= n; ++m) total += Rational(stirling1_unsigned(n, m)) * inner_poly_sum(m, k, z);
    return sign(n) * total;
}

Rational cube_integrate(const RatPolynomial& p, int k) {
    require_k(k);
    RatPolynomial q = p;
    for (int round = 0; round < k; ++round) {
        const RatPolynomial big = poly_antideriv(q);
        q = poly_shift(big, Rational(1)) - big;
    }
    return q(Rational(0));
}

Rational product_cube_integrate(const RatPolynomial& p, int k) {
    require_k(k);
    Rational total(0);
    for (int j = 0; j <= p.degree(); ++j) total += p.coeff(j) / Rational(j + 1).pow(k);
    return total;
}

Rational cube_moment(int j, int k) {
    require_n(j);
    require_k(k);
    static std::mutex mutex;
    static std::map<std::pair<int, int>, Rational> cache;
    {
        std::lock_guard lock(mutex);
        if (const auto it = cache.find({j, k}); it != cache.end()) return it->second;
    }
    Rational total(0);
    for (const auto& parts : compositions(j, k)) {
        BigInt denom = 1;
        for (int part : parts) denom *= part + 1;
        total += Rational(multinomial(j, parts), denom);
    }
    std::lock_guard lock(mutex);
    cache.emplace(std::make_pair(j, k), total);
    return total;
}

Rational cauchy_hi1(int n, int k, CauchyMethod method) { return hi_number(CauchyKind::first, n, k, method); }
Rational cauchy_hi2(int n, int k, CauchyMethod method) { return hi_number(CauchyKind::second, n, k, method); }
Rational cauchy_hi(CauchyKind kind, int n, int k, CauchyMethod method) { return hi_number(kind, n, k, method); }

RatPolynomial cauchy_hi_poly1(int n, int k, CauchyPolyMethod method) { return hi_poly(CauchyKind::first, n, k, method); }
RatPolynomial cauchy_hi_poly2(int n, int k, CauchyPolyMethod method) { return hi_poly(CauchyKind::second, n, k, method); }
RatPolynomial cauchy_hi_poly1(int n, int k) { return checked_poly(CauchyKind::first, n, k); }
RatPolynomial cauchy_hi_poly2(int n, int k) { return checked_poly(CauchyKind::second, n, k); }
RatPolynomial cauchy_hi_poly(CauchyKind kind, int n, int k, CauchyPolyMethod method) { return hi_poly(kind, n, k, method); }

Rational cauchy_hi_poly_oracle_at(CauchyKind kind, int n, int k, const Rational& x) {
    require_n(n);
    return cube_integrate(oracle_integrand(kind, n, x), k);
}

}  // namespace hocauchy
