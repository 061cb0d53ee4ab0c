#pragma once

// Truncated formal power series in q with exact integer coefficients
// (TruncatedSeries, GMP-backed) and with coefficients reduced modulo a
// fixed modulus (ModSeries). All operations truncate consistently:
// coefficient n of any result depends only on input coefficients 0..n.
// Values are immutable after construction; operations are pure functions.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcong {

namespace detail {

inline std::size_t checked_precision(std::size_t precision) {
    if (precision == 0)
        throw std::invalid_argument("series precision must be positive");
    return precision;
}

inline std::uint64_t checked_modulus(std::uint64_t m) {
    if (m < 2)
        throw std::invalid_argument("modulus must be >= 2");
    if (m > 0xffffffffULL)
        throw std::invalid_argument("modulus must fit in 32 bits");
    return m;
}

} // namespace detail

class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t precision)
        : coeffs_(detail::checked_precision(precision)) {}

    explicit TruncatedSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
        detail::checked_precision(coeffs_.size());
    }

    static TruncatedSeries constant(const mpz_class& c, std::size_t precision) {
        TruncatedSeries s(precision);
        s.coeffs_[0] = c;
        return s;
    }

    static TruncatedSeries one(std::size_t precision) { return constant(1, precision); }

    static TruncatedSeries monomial(const mpz_class& c, std::size_t exponent,
                                    std::size_t precision) {
        TruncatedSeries s(precision);
        if (exponent < precision)
            s.coeffs_[exponent] = c;
        return s;
    }

    std::size_t precision() const noexcept { return coeffs_.size(); }

    const mpz_class& operator[](std::size_t n) const { return coeffs_.at(n); }

    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<mpz_class> coeffs_;
};

class ModSeries {
public:
    ModSeries(std::uint64_t modulus, std::size_t precision)
        : modulus_(detail::checked_modulus(modulus)),
          coeffs_(detail::checked_precision(precision)) {}

    ModSeries(std::uint64_t modulus, std::vector<std::uint32_t> coeffs)
        : modulus_(detail::checked_modulus(modulus)), coeffs_(std::move(coeffs)) {
        detail::checked_precision(coeffs_.size());
        for (std::uint32_t c : coeffs_)
            if (c >= modulus_)
                throw std::invalid_argument("ModSeries coefficient out of range [0, modulus)");
    }

    static ModSeries one(std::uint64_t modulus, std::size_t precision) {
        ModSeries s(modulus, precision);
        s.coeffs_[0] = 1 % modulus;
        return s;
    }

    std::uint64_t modulus() const noexcept { return modulus_; }
    std::size_t precision() const noexcept { return coeffs_.size(); }
    std::uint32_t operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const ModSeries& a, const ModSeries& b) {
        return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::uint64_t modulus_;
    std::vector<std::uint32_t> coeffs_;
};

namespace detail {

inline std::size_t common_precision(std::size_t a, std::size_t b) { return std::min(a, b); }

inline std::uint64_t common_modulus(const ModSeries& a, const ModSeries& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("ModSeries modulus mismatch");
    return a.modulus();
}

// Nonzero terms of a series prefix, the basis of the sparse-operand fast
// path: multiplying by a series with t nonzero terms costs O(n * t).
inline std::vector<std::pair<std::size_t, const mpz_class*>>
nonzero_terms(const std::vector<mpz_class>& c, std::size_t limit) {
    std::vector<std::pair<std::size_t, const mpz_class*>> out;
    for (std::size_t i = 0; i < limit; ++i)
        if (mpz_sgn(c[i].get_mpz_t()) != 0)
            out.emplace_back(i, &c[i]);
    return out;
}

inline std::vector<std::pair<std::size_t, std::uint64_t>>
nonzero_terms(const std::vector<std::uint32_t>& c, std::size_t limit) {
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    for (std::size_t i = 0; i < limit; ++i)
        if (c[i] != 0)
            out.emplace_back(i, c[i]);
    return out;
}

} // namespace detail

// ---- exact arithmetic ------------------------------------------------------

inline TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = detail::common_precision(a.precision(), b.precision());
    std::vector<mpz_class> r(n);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = a.coeffs()[i] + b.coeffs()[i];
    return TruncatedSeries(std::move(r));
}

inline TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = detail::common_precision(a.precision(), b.precision());
    std::vector<mpz_class> r(n);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = a.coeffs()[i] - b.coeffs()[i];
    return TruncatedSeries(std::move(r));
}

inline TruncatedSeries negate(const TruncatedSeries& a) {
    std::vector<mpz_class> r(a.precision());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = -a.coeffs()[i];
    return TruncatedSeries(std::move(r));
}

inline TruncatedSeries mul_scalar(const TruncatedSeries& a, const mpz_class& c) {
    std::vector<mpz_class> r(a.precision());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = c * a.coeffs()[i];
    return TruncatedSeries(std::move(r));
}

// Cauchy product truncated to the smaller precision. Iterates the operand
// with fewer nonzero coefficients, so multiplication by a pentagonal-type
// expansion stays O(n * terms) instead of O(n^2).
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = detail::common_precision(a.precision(), b.precision());
    const auto ta = detail::nonzero_terms(a.coeffs(), n);
    const auto tb = detail::nonzero_terms(b.coeffs(), n);
    const auto& sparse = (ta.size() <= tb.size()) ? ta : tb;
    const auto& dense = (ta.size() <= tb.size()) ? b.coeffs() : a.coeffs();
    std::vector<mpz_class> r(n);
    for (const auto& [e, c] : sparse) {
        for (std::size_t j = 0; j + e < n; ++j) {
            if (mpz_sgn(dense[j].get_mpz_t()) != 0)
                mpz_addmul(r[e + j].get_mpz_t(), c->get_mpz_t(), dense[j].get_mpz_t());
        }
    }
    return TruncatedSeries(std::move(r));
}

// Multiplicative inverse to precision; requires constant term +-1 so the
// inverse stays integral. b[n] = -a[0] * sum_{k>=1} a[k] b[n-k].
inline TruncatedSeries invert(const TruncatedSeries& a) {
    const mpz_class& a0 = a.coeffs()[0];
    if (a0 != 1 && a0 != -1)
        throw std::domain_error("invert: constant term must be +1 or -1, got " + a0.get_str());
    const std::size_t n = a.precision();
    auto tail = detail::nonzero_terms(a.coeffs(), n);
    tail.erase(tail.begin()); // drop the unit constant term
    std::vector<mpz_class> b(n);
    b[0] = a0;
    mpz_class acc;
    for (std::size_t i = 1; i < n; ++i) {
        acc = 0;
        for (const auto& [e, c] : tail) {
            if (e > i)
                break;
            mpz_addmul(acc.get_mpz_t(), c->get_mpz_t(), b[i - e].get_mpz_t());
        }
        b[i] = (a0 == 1) ? -acc : acc;
    }
    return TruncatedSeries(std::move(b));
}

inline TruncatedSeries pow(const TruncatedSeries& a, long long e) {
    if (e < 0)
        throw std::invalid_argument("pow: negative exponent; compose with invert explicitly");
    TruncatedSeries r = TruncatedSeries::one(a.precision());
    for (long long i = 0; i < e; ++i)
        r = mul(r, a);
    return r;
}

// result[n] = a[A n + B]; keeps exactly the coefficients the input precision
// determines: result precision = floor((precision - B - 1) / A) + 1.
inline TruncatedSeries extract_progression(const TruncatedSeries& a, std::size_t A,
                                           std::size_t B) {
    if (A == 0)
        throw std::invalid_argument("extract_progression: A must be positive");
    if (B >= A)
        throw std::invalid_argument("extract_progression: offset B must satisfy B < A");
    if (B >= a.precision())
        throw std::invalid_argument("extract_progression: precision too small for offset");
    const std::size_t n = (a.precision() - B - 1) / A + 1;
    std::vector<mpz_class> r(n);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = a.coeffs()[A * i + B];
    return TruncatedSeries(std::move(r));
}

inline TruncatedSeries shift(const TruncatedSeries& a, std::size_t k) {
    const std::size_t n = a.precision();
    std::vector<mpz_class> r(n);
    for (std::size_t i = k; i < n; ++i)
        r[i] = a.coeffs()[i - k];
    return TruncatedSeries(std::move(r));
}

inline ModSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m) {
    detail::checked_modulus(m);
    std::vector<std::uint32_t> r(a.precision());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = static_cast<std::uint32_t>(mpz_fdiv_ui(a.coeffs()[i].get_mpz_t(),
                                                      static_cast<unsigned long>(m)));
    return ModSeries(m, std::move(r));
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return mul(a, b);
}

// ---- modular arithmetic ----------------------------------------------------

inline ModSeries add(const ModSeries& a, const ModSeries& b) {
    const std::uint64_t m = detail::common_modulus(a, b);
    const std::size_t n = detail::common_precision(a.precision(), b.precision());
    std::vector<std::uint32_t> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = std::uint64_t(a.coeffs()[i]) + b.coeffs()[i];
        r[i] = static_cast<std::uint32_t>(s >= m ? s - m : s);
    }
    return ModSeries(m, std::move(r));
}

inline ModSeries sub(const ModSeries& a, const ModSeries& b) {
    const std::uint64_t m = detail::common_modulus(a, b);
    const std::size_t n = detail::common_precision(a.precision(), b.precision());
    std::vector<std::uint32_t> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = std::uint64_t(a.coeffs()[i]) + m - b.coeffs()[i];
        r[i] = static_cast<std::uint32_t>(s >= m ? s - m : s);
    }
    return ModSeries(m, std::move(r));
}

inline ModSeries mul(const ModSeries& a, const ModSeries& b) {
    const std::uint64_t m = detail::common_modulus(a, b);
    const std::size_t n = detail::common_precision(a.precision(), b.precision());
    const auto ta = detail::nonzero_terms(a.coeffs(), n);
    const auto tb = detail::nonzero_terms(b.coeffs(), n);
    const auto& sparse = (ta.size() <= tb.size()) ? ta : tb;
    const auto& dense = (ta.size() <= tb.size()) ? b.coeffs() : a.coeffs();
    std::vector<std::uint32_t> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned __int128 acc = 0;
        for (const auto& [e, c] : sparse) {
            if (e > i)
                break;
            acc += static_cast<unsigned __int128>(c) * dense[i - e];
        }
        r[i] = static_cast<std::uint32_t>(acc % m);
    }
    return ModSeries(m, std::move(r));
}

namespace detail {

// Inverse of x modulo m via extended Euclid; throws if not invertible.
inline std::uint64_t mod_inverse(std::uint64_t x, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(x % m);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1)
        throw std::domain_error("constant term not invertible modulo " + std::to_string(m));
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

} // namespace detail

inline ModSeries invert(const ModSeries& a) {
    const std::uint64_t m = a.modulus();
    const std::size_t n = a.precision();
    const std::uint64_t inv0 = detail::mod_inverse(a.coeffs()[0], m);
    auto tail = detail::nonzero_terms(a.coeffs(), n);
    if (!tail.empty() && tail.front().first == 0)
        tail.erase(tail.begin());
    std::vector<std::uint32_t> b(n);
    b[0] = static_cast<std::uint32_t>(inv0);
    for (std::size_t i = 1; i < n; ++i) {
        unsigned __int128 acc = 0;
        for (const auto& [e, c] : tail) {
            if (e > i)
                break;
            acc += static_cast<unsigned __int128>(c) * b[i - e];
        }
        const std::uint64_t s = static_cast<std::uint64_t>(acc % m);
        b[i] = static_cast<std::uint32_t>((inv0 * ((m - s) % m)) % m);
    }
    return ModSeries(m, std::move(b));
}

inline ModSeries pow(const ModSeries& a, long long e) {
    if (e < 0)
        throw std::invalid_argument("pow: negative exponent; compose with invert explicitly");
    ModSeries r = ModSeries::one(a.modulus(), a.precision());
    for (long long i = 0; i < e; ++i)
        r = mul(r, a);
    return r;
}

inline ModSeries extract_progression(const ModSeries& a, std::size_t A, std::size_t B) {
    if (A == 0)
        throw std::invalid_argument("extract_progression: A must be positive");
    if (B >= A)
        throw std::invalid_argument("extract_progression: offset B must satisfy B < A");
    if (B >= a.precision())
        throw std::invalid_argument("extract_progression: precision too small for offset");
    const std::size_t n = (a.precision() - B - 1) / A + 1;
    std::vector<std::uint32_t> r(n);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = a.coeffs()[A * i + B];
    return ModSeries(a.modulus(), std::move(r));
}

inline ModSeries shift(const ModSeries& a, std::size_t k) {
    std::vector<std::uint32_t> r(a.precision());
    for (std::size_t i = k; i < r.size(); ++i)
        r[i] = a.coeffs()[i - k];
    return ModSeries(a.modulus(), std::move(r));
}

inline ModSeries operator+(const ModSeries& a, const ModSeries& b) { return add(a, b); }
inline ModSeries operator-(const ModSeries& a, const ModSeries& b) { return sub(a, b); }
inline ModSeries operator*(const ModSeries& a, const ModSeries& b) { return mul(a, b); }

// ---- coefficient dump ------------------------------------------------------

// CSV lines "n,coefficient" in ascending n, decimal integers, no header.
inline void write_csv(std::ostream& os, const TruncatedSeries& a) {
    for (std::size_t i = 0; i < a.precision(); ++i)
        os << i << ',' << a.coeffs()[i].get_str() << '\n';
}

inline void write_csv(std::ostream& os, const ModSeries& a) {
    for (std::size_t i = 0; i < a.precision(); ++i)
        os << i << ',' << a.coeffs()[i] << '\n';
}

} // namespace qcong
