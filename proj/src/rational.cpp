#include "hocauchy/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hocauchy {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("division by zero");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt n(std::string(num), 10);
    if (negative) n = -n;
    return Rational(n, BigInt(std::string(den), 10));
}

std::string Rational::to_string() const {
    std::string out = value_.get_num().get_str();
    if (value_.get_den() != 1) {
        out += '/';
        out += value_.get_den().get_str();
    }
    return out;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational r;
    r.value_ = 1 / value_;
    return r;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Rational result(1);
    Rational base = *this;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        BigInt r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    // binom(n, k) = (-1)^k binom(k - n - 1, k) for n < 0
    BigInt r = binomial(k - n - 1, k);
    return (k % 2 == 0) ? r : BigInt(-r);
}

}  // namespace hocauchy
