#ifndef HOCAUCHY_TESTS_SUPPORT_HPP
#define HOCAUCHY_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hocauchy/polynomial.hpp"
#include "hocauchy/rational.hpp"
#include "hocauchy/series.hpp"

namespace hocauchy::test {

inline Rational Q(long n, long d = 1) { return Rational(n, d); }
inline Rational Qs(const char* text) { return Rational::parse(text); }

inline RatPolynomial P(std::initializer_list<const char*> coeffs) {
    std::vector<Rational> c;
    for (const char* s : coeffs) c.push_back(Rational::parse(s));
    return RatPolynomial(std::move(c));
}

inline PowerSeries S(std::initializer_list<const char*> coeffs) {
    std::vector<Rational> c;
    for (const char* s : coeffs) c.push_back(Rational::parse(s));
    return PowerSeries(std::move(c));
}

/// Deterministic generators for the hand-rolled property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    BigInt big(int bits) {
        std::string digits;
        for (int i = 0; i < bits; i += 32) digits += std::to_string(rng_() & 0xffffffffU);
        BigInt v(digits.empty() ? "0" : digits, 10);
        v >>= static_cast<mp_bitcnt_t>(std::max<long>(0, static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2)) - bits));
        return (rng_() & 1U) ? BigInt(-v) : v;
    }

    Rational rational(int bits) {
        BigInt den = big(bits);
        if (den < 0) den = -den;
        if (den == 0) den = 1;
        return Rational(big(bits), den);
    }

    Rational small(long range = 9) {
        std::uniform_int_distribution<long> num(-range, range);
        std::uniform_int_distribution<long> den(1, range);
        return Rational(num(rng_), den(rng_));
    }

    RatPolynomial poly(int max_degree) {
        std::uniform_int_distribution<int> deg(0, max_degree);
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng_)) + 1);
        for (auto& v : c) v = small();
        return RatPolynomial(std::move(c));
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

}  // namespace hocauchy::test

#endif
