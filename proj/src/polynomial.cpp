#include "hocauchy/polynomial.hpp"

#include <ostream>
#include <stdexcept>

namespace hocauchy {

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::monomial(const Rational& c, int power) {
    if (power < 0) throw std::invalid_argument("negative monomial power");
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::identity() { return monomial(Rational(1), 1); }

Rational RatPolynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational RatPolynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

void RatPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RatPolynomial(std::move(out));
}

RatPolynomial& RatPolynomial::operator*=(const RatPolynomial& rhs) { return *this = *this * rhs; }

RatPolynomial& RatPolynomial::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

RatPolynomial RatPolynomial::operator-() const {
    RatPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Rational RatPolynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<std::string> RatPolynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    if (out.empty()) out.emplace_back("0");
    return out;
}

std::string RatPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = mag == Rational(1);
        if (i == 0 || !unit) out += mag.to_string();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RatPolynomial& p) { return os << p.to_string(); }

RatPolynomial poly_mul(const RatPolynomial& p, const RatPolynomial& q) { return p * q; }

Rational poly_eval(const RatPolynomial& p, const Rational& x) { return p(x); }

RatPolynomial poly_shift(const RatPolynomial& p, const Rational& a) {
    if (p.is_zero() || a.is_zero()) return p;
    const int n = p.degree();
    std::vector<Rational> powers(static_cast<std::size_t>(n) + 1);
    powers[0] = Rational(1);
    for (int i = 1; i <= n; ++i) powers[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i) - 1] * a;

    // binomial row i built incrementally from row i-1 (Pascal)
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    std::vector<BigInt> row{1};
    for (int i = 0; i <= n; ++i) {
        if (i > 0) {
            std::vector<BigInt> next(static_cast<std::size_t>(i) + 1);
            next[0] = 1;
            next[static_cast<std::size_t>(i)] = 1;
            for (int j = 1; j < i; ++j)
                next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] + row[static_cast<std::size_t>(j)];
            row = std::move(next);
        }
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        // (x + a)^i = sum_j binom(i, j) a^(i-j) x^j
        for (int j = 0; j <= i; ++j)
            out[static_cast<std::size_t>(j)] += c * Rational(row[static_cast<std::size_t>(j)]) * powers[static_cast<std::size_t>(i - j)];
    }
    return RatPolynomial(std::move(out));
}

RatPolynomial poly_reflect(const RatPolynomial& p) {
    std::vector<Rational> c = p.coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return RatPolynomial(std::move(c));
}

RatPolynomial poly_antideriv(const RatPolynomial& p) {
    if (p.is_zero()) return {};
    std::vector<Rational> c(p.coeffs().size() + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        c[i + 1] = p.coeffs()[i] / Rational(static_cast<long>(i + 1));
    return RatPolynomial(std::move(c));
}

RatPolynomial poly_derivative(const RatPolynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> c(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) c[i - 1] = p.coeffs()[i] * Rational(static_cast<long>(i));
    return RatPolynomial(std::move(c));
}

RatPolynomial falling_factorial(int n) {
    if (n < 0) throw std::invalid_argument("falling_factorial: negative n");
    RatPolynomial p = RatPolynomial::constant(1);
    for (int i = 0; i < n; ++i) p *= RatPolynomial({Rational(-i), Rational(1)});
    return p;
}

RatPolynomial rising_factorial(int n) {
    if (n < 0) throw std::invalid_argument("rising_factorial: negative n");
    RatPolynomial p = RatPolynomial::constant(1);
    for (int i = 0; i < n; ++i) p *= RatPolynomial({Rational(i), Rational(1)});
    return p;
}

RatPolynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    // Newton divided differences
    const std::size_t n = xs.size();
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational span = xs[i] - xs[i - level];
            if (span.is_zero()) throw std::invalid_argument("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / span;
        }
    }
    RatPolynomial result;
    for (std::size_t i = n; i-- > 0;) {
        result *= RatPolynomial({-xs[i], Rational(1)});
        result += RatPolynomial::constant(dd[i]);
    }
    return result;
}

}  // namespace hocauchy
