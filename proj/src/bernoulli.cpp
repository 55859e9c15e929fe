#include "hocauchy/bernoulli.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hocauchy/series.hpp"

namespace hocauchy {

namespace {

std::vector<Rational> compute_numbers(int n_max, long alpha) {
    const PowerSeries gf = named_series("bernoulli_gf", n_max + 1, alpha);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) out.push_back(egf_coeff(gf, n));
    return out;
}

}  // namespace

std::vector<Rational> bernoulli_hi_numbers(int n_max, long alpha) {
    if (n_max < 0) return {};
    static std::mutex mutex;
    static std::map<long, std::vector<Rational>> cache;
    {
        std::lock_guard lock(mutex);
        const auto it = cache.find(alpha);
        if (it != cache.end() && static_cast<int>(it->second.size()) > n_max)
            return {it->second.begin(), it->second.begin() + n_max + 1};
    }
    // grow geometrically so sweeps over n do not recompute every step
    int target = n_max;
    {
        std::lock_guard lock(mutex);
        const auto it = cache.find(alpha);
        if (it != cache.end()) target = std::max(n_max, 2 * static_cast<int>(it->second.size()));
    }
    std::vector<Rational> numbers = compute_numbers(target, alpha);
    std::lock_guard lock(mutex);
    auto& slot = cache[alpha];
    if (slot.size() < numbers.size()) slot = numbers;
    return {numbers.begin(), numbers.begin() + n_max + 1};
}

RatPolynomial bernoulli_hi_poly(int n, long alpha) {
    if (n < 0) throw std::invalid_argument("bernoulli_hi_poly: negative n");
    const std::vector<Rational> b = bernoulli_hi_numbers(n, alpha);
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[static_cast<std::size_t>(n - j)] = Rational(binomial(n, j)) * b[static_cast<std::size_t>(j)];
    return RatPolynomial(std::move(c));
}

}  // namespace hocauchy
