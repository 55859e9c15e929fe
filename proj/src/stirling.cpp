#include "hocauchy/stirling.hpp"

#include <stdexcept>

namespace hocauchy {

StirlingTable::StirlingTable(StirlingKind kind) : kind_(kind), rows_{{BigInt(1)}} {}

void StirlingTable::fill(long n) {
    std::lock_guard lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) {
        const long m = static_cast<long>(rows_.size()) - 1;  // build row m+1 from row m
        const auto& prev = rows_.back();
        std::vector<BigInt> next(static_cast<std::size_t>(m) + 2);
        for (long l = 1; l <= m + 1; ++l) {
            const BigInt left = prev[static_cast<std::size_t>(l) - 1];
            const BigInt same = l <= m ? prev[static_cast<std::size_t>(l)] : BigInt(0);
            BigInt& out = next[static_cast<std::size_t>(l)];
            switch (kind_) {
            case StirlingKind::signed_first: out = left - m * same; break;
            case StirlingKind::unsigned_first: out = left + m * same; break;
            case StirlingKind::second: out = left + l * same; break;
            }
        }
        rows_.push_back(std::move(next));
    }
}

BigInt StirlingTable::operator()(long n, long l) {
    if (n < 0 || l < 0 || l > n) return 0;
    fill(n);
    std::lock_guard lock(mutex_);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(l)];
}

std::vector<BigInt> StirlingTable::row(long n) {
    if (n < 0) return {};
    fill(n);
    std::lock_guard lock(mutex_);
    return rows_[static_cast<std::size_t>(n)];
}

namespace {

StirlingTable& table(StirlingKind kind) {
    static StirlingTable first(StirlingKind::signed_first);
    static StirlingTable unsigned_first(StirlingKind::unsigned_first);
    static StirlingTable second(StirlingKind::second);
    switch (kind) {
    case StirlingKind::signed_first: return first;
    case StirlingKind::unsigned_first: return unsigned_first;
    case StirlingKind::second: break;
    }
    return second;
}

}  // namespace

BigInt stirling1_signed(long n, long l) { return table(StirlingKind::signed_first)(n, l); }
BigInt stirling1_unsigned(long n, long l) { return table(StirlingKind::unsigned_first)(n, l); }
BigInt stirling2(long n, long l) { return table(StirlingKind::second)(n, l); }

BigInt multinomial(long n, std::span<const int> parts) {
    long sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    BigInt r = factorial(n);
    for (int p : parts) r /= factorial(p);
    return r;
}

Compositions::Compositions(int total, int parts) : total_(total), parts_(parts) {
    if (parts < 1) throw std::invalid_argument("compositions: parts must be positive");
}

Compositions::iterator::iterator(int total, int parts)
    : current_(static_cast<std::size_t>(parts), 0), done_(total < 0) {
    if (!done_) current_.back() = total;
}

Compositions::iterator& Compositions::iterator::operator++() {
    // rightmost i < k-1 whose suffix (i+1..k-1) is nonempty in mass
    const int k = static_cast<int>(current_.size());
    int suffix = current_.back();
    for (int i = k - 2; i >= 0; --i) {
        if (suffix > 0) {
            ++current_[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k - 1; ++j) current_[static_cast<std::size_t>(j)] = 0;
            current_.back() = suffix - 1;
            return *this;
        }
        suffix += current_[static_cast<std::size_t>(i)];
    }
    done_ = true;
    return *this;
}

}  // namespace hocauchy
