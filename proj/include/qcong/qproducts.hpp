#pragma once

// Construction of the specific q-series the toolkit works with: Euler
// products (q^d;q^d)_inf via the pentagonal number theorem, the partition
// and cubic-partition generating functions, Dedekind eta expansions, and
// the classical Jacobi / Gauss series.

#include "qcong/series.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qcong {

// (q^d;q^d)_inf = prod_{n>=1} (1 - q^{dn}), expanded by Euler's pentagonal
// number theorem: sum_{j in Z} (-1)^j q^{d j(3j-1)/2}. The expansion has
// O(sqrt(precision/d)) nonzero terms.
inline TruncatedSeries qpochhammer_inf(std::uint64_t d, std::size_t precision) {
    if (d == 0)
        throw std::invalid_argument("qpochhammer_inf: d must be positive");
    std::vector<mpz_class> c(detail::checked_precision(precision));
    c[0] = 1;
    for (std::uint64_t j = 1;; ++j) {
        const std::uint64_t w1 = d * (j * (3 * j - 1) / 2);
        const std::uint64_t w2 = d * (j * (3 * j + 1) / 2);
        if (w1 >= precision && w2 >= precision)
            break;
        const int sgn = (j % 2 == 1) ? -1 : 1;
        if (w1 < precision)
            c[w1] += sgn;
        if (w2 < precision)
            c[w2] += sgn;
    }
    return TruncatedSeries(std::move(c));
}

// 1/(q;q)_inf: coefficient n is the partition number p(n).
inline TruncatedSeries partition_series(std::size_t precision) {
    return invert(qpochhammer_inf(1, precision));
}

// 1/((q;q)_inf (q^2;q^2)_inf): coefficient n counts partition pairs
// (lambda, mu) with |lambda| + |mu| = n and mu restricted to even parts.
inline TruncatedSeries cubic_partition_series(std::size_t precision) {
    return invert(mul(qpochhammer_inf(1, precision), qpochhammer_inf(2, precision)));
}

// Reduced-coefficient builders for large congruence scans; equal to
// reduce_mod of the exact series, but never materialize big integers.
inline ModSeries partition_series_mod(std::uint64_t modulus, std::size_t precision) {
    return invert(reduce_mod(qpochhammer_inf(1, precision), modulus));
}

inline ModSeries cubic_partition_series_mod(std::uint64_t modulus, std::size_t precision) {
    return invert(mul(reduce_mod(qpochhammer_inf(1, precision), modulus),
                      reduce_mod(qpochhammer_inf(2, precision), modulus)));
}

// eta(delta z) up to the fractional power: the object is
// q^{offset24/24} * series with offset24 = delta, series = (q^d;q^d)_inf.
// The fractional exponent is carried as a count of 1/24 units; only an
// eta-quotient whose total offset is divisible by 24 exports to a plain
// TruncatedSeries (see etaquot.hpp).
struct EtaExpansion {
    std::uint64_t delta;
    std::int64_t offset24;
    TruncatedSeries series;
};

inline EtaExpansion eta_expansion(std::uint64_t delta, std::size_t precision) {
    if (delta == 0)
        throw std::invalid_argument("eta_expansion: delta must be positive");
    return EtaExpansion{delta, static_cast<std::int64_t>(delta),
                        qpochhammer_inf(delta, precision)};
}

// sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)}, the cube of (q^2;q^2)_inf.
// Generated from the exponent formula, independent of the product route.
inline TruncatedSeries jacobi_cube_series(std::size_t precision) {
    std::vector<mpz_class> c(detail::checked_precision(precision));
    for (std::uint64_t n = 0; n * (n + 1) < precision; ++n) {
        const long v = static_cast<long>(2 * n + 1);
        c[n * (n + 1)] = (n % 2 == 0) ? v : -v;
    }
    return TruncatedSeries(std::move(c));
}

// sum_{n>=0} q^{n(n+1)/2} = (q^2;q^2)_inf^2 / (q;q)_inf.
inline TruncatedSeries triangular_series(std::size_t precision) {
    std::vector<mpz_class> c(detail::checked_precision(precision));
    for (std::uint64_t n = 0; n * (n + 1) / 2 < precision; ++n)
        c[n * (n + 1) / 2] = 1;
    return TruncatedSeries(std::move(c));
}

} // namespace qcong
