#pragma once

// Parity of the cubic partition numbers: the mod-2 recurrence driven by the
// triangular-number indicator, Euler's pentagonal recurrence for p(n) mod 2,
// and census statistics (counts, witnesses past thresholds, odd fraction).

#include <boost/rational.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace qcong {

// Packed bit sequence; one bit per coefficient for the 10^5..10^6-scale
// parity sweeps.
class BitSequence {
public:
    explicit BitSequence(std::size_t size) : size_(size), words_((size + 63) / 64) {}

    std::size_t size() const noexcept { return size_; }

    bool get(std::size_t i) const { return (words_.at(i / 64) >> (i % 64)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i % 64);
        if (v)
            words_.at(i / 64) |= mask;
        else
            words_.at(i / 64) &= ~mask;
    }

    void flip(std::size_t i) { words_.at(i / 64) ^= std::uint64_t(1) << (i % 64); }

    friend bool operator==(const BitSequence& a, const BitSequence& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    std::size_t size_;
    std::vector<std::uint64_t> words_;
};

// 1 iff n is a triangular number s(s+1)/2, i.e. iff 8n+1 is a perfect square.
inline int delta_triangular(long long n) {
    if (n < 0)
        return 0;
    const unsigned long long x = 8ULL * static_cast<unsigned long long>(n) + 1;
    unsigned long long r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(x)));
    while (r * r > x)
        --r;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    return (r * r == x) ? 1 : 0;
}

// a(n) mod 2 for 0 <= n <= n_max via the recurrence
//   a(n) + sum_{k >= 1, k + k^2 <= n} a(n - k - k^2) == Delta(n) (mod 2),
// with no series arithmetic involved; independent of the generating-function
// route. O(n^{3/2}) bit flips in total.
inline BitSequence parity_recurrence(std::size_t n_max) {
    BitSequence bits(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        bool t = delta_triangular(static_cast<long long>(n)) != 0;
        for (std::size_t k = 1; k * k + k <= n; ++k)
            t ^= bits.get(n - k * k - k);
        bits.set(n, t);
    }
    return bits;
}

// p(n) mod 2 via Euler's pentagonal recurrence
//   p(n) = sum_{j != 0} (-1)^{j+1} p(n - j(3j-1)/2); signs drop out mod 2.
inline BitSequence euler_parity_p(std::size_t n_max) {
    BitSequence bits(n_max + 1);
    bits.set(0, true);
    for (std::size_t n = 1; n <= n_max; ++n) {
        bool t = false;
        for (std::size_t j = 1;; ++j) {
            const std::size_t w1 = j * (3 * j - 1) / 2;
            const std::size_t w2 = j * (3 * j + 1) / 2;
            if (w1 > n && w2 > n)
                break;
            if (w1 <= n)
                t ^= bits.get(n - w1);
            if (w2 <= n)
                t ^= bits.get(n - w2);
        }
        bits.set(n, t);
    }
    return bits;
}

struct ThresholdWitness {
    long long threshold;
    std::optional<long long> first_even; // smallest index >= threshold with even value
    std::optional<long long> first_odd;
};

struct ParityCensus {
    long long n_max;
    long long even_count;
    long long odd_count;
    std::vector<ThresholdWitness> witnesses;
    boost::rational<long long> odd_fraction; // reported, never asserted
};

// Census over the parities of a(0..n_max). For each requested threshold m
// the smallest even- and odd-valued indices >= m are located; their
// existence for every m is the computational shadow of the infinitude of
// both parities.
inline ParityCensus parity_census(std::size_t n_max, const std::vector<long long>& thresholds) {
    const BitSequence bits = parity_recurrence(n_max);
    ParityCensus census;
    census.n_max = static_cast<long long>(n_max);
    census.even_count = 0;
    census.odd_count = 0;
    for (std::size_t n = 0; n <= n_max; ++n)
        (bits.get(n) ? census.odd_count : census.even_count)++;
    census.odd_fraction =
        boost::rational<long long>(census.odd_count, static_cast<long long>(n_max) + 1);
    for (long long m : thresholds) {
        if (m < 0)
            throw std::invalid_argument("parity_census: thresholds must be nonnegative");
        ThresholdWitness w{m, std::nullopt, std::nullopt};
        for (std::size_t n = static_cast<std::size_t>(m); n <= n_max; ++n) {
            if (!w.first_even && !bits.get(n))
                w.first_even = static_cast<long long>(n);
            if (!w.first_odd && bits.get(n))
                w.first_odd = static_cast<long long>(n);
            if (w.first_even && w.first_odd)
                break;
        }
        census.witnesses.push_back(w);
    }
    return census;
}

// CSV lines "n,bit".
inline void write_bits_csv(std::ostream& os, const BitSequence& bits) {
    for (std::size_t i = 0; i < bits.size(); ++i)
        os << i << ',' << (bits.get(i) ? 1 : 0) << '\n';
}

} // namespace qcong
