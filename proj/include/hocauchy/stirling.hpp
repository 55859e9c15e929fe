#ifndef HOCAUCHY_STIRLING_HPP
#define HOCAUCHY_STIRLING_HPP

#include <cstddef>
#include <iterator>
#include <mutex>
#include <span>
#include <vector>

#include "hocauchy/rational.hpp"

namespace hocauchy {

enum class StirlingKind { signed_first, unsigned_first, second };

/// Memoized Stirling triangle of one kind: row n holds entries l = 0..n,
/// each row derived from the previous by the three-term recurrence.
/// Growth is guarded by a mutex; queries outside the triangle are 0.
class StirlingTable {
public:
    explicit StirlingTable(StirlingKind kind);

    [[nodiscard]] StirlingKind kind() const { return kind_; }
    /// Extends the triangle through row n.
    void fill(long n);
    [[nodiscard]] BigInt operator()(long n, long l);
    /// Copy of row n (entries l = 0..n).
    [[nodiscard]] std::vector<BigInt> row(long n);

private:
    StirlingKind kind_;
    std::mutex mutex_;
    std::vector<std::vector<BigInt>> rows_;
};

/// s(n, l): coefficient of x^l in (x)_n.
BigInt stirling1_signed(long n, long l);
/// [n l] = (-1)^(n-l) s(n, l): coefficient of x^l in x^(n).
BigInt stirling1_unsigned(long n, long l);
BigInt stirling2(long n, long l);

/// n! / (l_1! ... l_k!). Throws std::invalid_argument unless the parts
/// are nonnegative and sum to n.
BigInt multinomial(long n, std::span<const int> parts);

/// Lazy stream of all k-tuples of nonnegative integers summing to `total`,
/// in lexicographic order.
class Compositions {
public:
    Compositions(int total, int parts);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = std::vector<int>;
        using difference_type = std::ptrdiff_t;
        using pointer = const std::vector<int>*;
        using reference = const std::vector<int>&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

    private:
        friend class Compositions;
        iterator(int total, int parts);
        std::vector<int> current_;
        bool done_ = true;
    };

    [[nodiscard]] iterator begin() const { return iterator(total_, parts_); }
    [[nodiscard]] iterator end() const { return {}; }

private:
    int total_;
    int parts_;
};

inline Compositions compositions(int total, int parts) { return {total, parts}; }

}  // namespace hocauchy

#endif  // HOCAUCHY_STIRLING_HPP
