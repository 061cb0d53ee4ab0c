#pragma once

// Eta-quotient descriptors f(z) = prod_{delta | N} eta(delta z)^{r_delta}
// and the machinery to certify them as modular forms on Gamma_0(N):
// the two mod-24 transformation conditions, the Nebentypus character via
// the Kronecker symbol, exact rational cusp orders, the Sturm bound, and
// the integral q-expansion.

#include "qcong/qproducts.hpp"
#include "qcong/series.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qcong {

using Rational = boost::rational<long long>;

// Kronecker symbol (m/n), fully extended: n may be even, negative or zero.
// Bottom factor 2 contributes (-1)^((m^2-1)/8) for odd m, bottom -1
// contributes the sign of m, and the odd part runs through the usual
// Jacobi reciprocity loop.
inline int kronecker(long long m, long long n) {
    if (n == 0)
        return (m == 1 || m == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (m < 0)
            result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (m % 2 == 0)
            return 0;
        const long long m8 = ((m % 8) + 8) % 8;
        if (m8 == 3 || m8 == 5)
            result = -result;
    }
    // Jacobi symbol for odd n > 0.
    m %= n;
    if (m < 0)
        m += n;
    while (m != 0) {
        while (m % 2 == 0) {
            m /= 2;
            if (n % 8 == 3 || n % 8 == 5)
                result = -result;
        }
        std::swap(m, n);
        if (m % 4 == 3 && n % 4 == 3)
            result = -result;
        m %= n;
    }
    return (n == 1) ? result : 0;
}

class EtaQuotient {
public:
    EtaQuotient(long long level, std::map<long long, long long> exponents)
        : level_(level), exponents_(std::move(exponents)) {
        if (level_ < 1)
            throw std::invalid_argument("EtaQuotient: level must be positive");
        for (const auto& [delta, r] : exponents_) {
            (void)r;
            if (delta < 1 || level_ % delta != 0)
                throw std::invalid_argument("EtaQuotient: exponent key " +
                                            std::to_string(delta) + " does not divide level " +
                                            std::to_string(level_));
        }
    }

    long long level() const noexcept { return level_; }
    const std::map<long long, long long>& exponents() const noexcept { return exponents_; }

    long long exponent(long long delta) const {
        auto it = exponents_.find(delta);
        return it == exponents_.end() ? 0 : it->second;
    }

private:
    long long level_;
    std::map<long long, long long> exponents_;
};

// k = (1/2) sum_delta r_delta, as an exact rational.
inline Rational weight(const EtaQuotient& eq) {
    long long s = 0;
    for (const auto& [delta, r] : eq.exponents()) {
        (void)delta;
        s += r;
    }
    return Rational(s, 2);
}

struct TwentyFourConditions {
    long long sum_delta_r;      // sum delta * r_delta
    long long sum_colevel_r;    // sum (N/delta) * r_delta
    bool first_ok;
    bool second_ok;
};

inline TwentyFourConditions check_24_conditions(const EtaQuotient& eq) {
    long long s1 = 0, s2 = 0;
    for (const auto& [delta, r] : eq.exponents()) {
        s1 += delta * r;
        s2 += (eq.level() / delta) * r;
    }
    auto div24 = [](long long v) { return v % 24 == 0; };
    return TwentyFourConditions{s1, s2, div24(s1), div24(s2)};
}

namespace detail {

// Squarefree core of s = prod delta^{r_delta} with sign (-1)^k folded in.
// Only the parity of each prime exponent matters for the Kronecker symbol,
// which sidesteps the (possibly huge or fractional) value of s itself.
inline long long character_core(const EtaQuotient& eq, long long k) {
    std::map<long long, long long> prime_exp;
    for (const auto& [delta, r] : eq.exponents()) {
        long long rest = delta;
        for (long long p = 2; p * p <= rest; ++p) {
            while (rest % p == 0) {
                prime_exp[p] += r;
                rest /= p;
            }
        }
        if (rest > 1)
            prime_exp[rest] += r;
    }
    long long core = 1;
    for (const auto& [p, e] : prime_exp)
        if (e % 2 != 0)
            core *= p;
    return (k % 2 != 0) ? -core : core;
}

} // namespace detail

// chi(d) = ((-1)^k s / d) with s = prod delta^{r_delta}; requires integral
// weight k.
inline int character_value(const EtaQuotient& eq, long long d) {
    const Rational k = weight(eq);
    if (k.denominator() != 1)
        throw std::domain_error("character_value: weight is not an integer");
    return kronecker(detail::character_core(eq, k.numerator()), d);
}

// Order of vanishing at the cusp represented by denominator d | N:
//   (N/24) * sum_{delta|N} gcd(d,delta)^2 r_delta / (gcd(d,N/d) d delta).
// Exact rational; may be negative for genuine quotients.
inline Rational cusp_order(const EtaQuotient& eq, long long d) {
    const long long N = eq.level();
    if (d < 1 || N % d != 0)
        throw std::invalid_argument("cusp_order: d must divide the level");
    Rational sum(0);
    for (const auto& [delta, r] : eq.exponents()) {
        const long long g = std::gcd(d, delta);
        sum += Rational(g * g * r, std::gcd(d, N / d) * d * delta);
    }
    return Rational(N, 24) * sum;
}

struct CuspOrderReport {
    std::vector<std::pair<long long, Rational>> orders; // one entry per divisor of N
    bool all_nonnegative;
};

inline CuspOrderReport cusp_orders(const EtaQuotient& eq) {
    CuspOrderReport rep;
    rep.all_nonnegative = true;
    for (long long d = 1; d <= eq.level(); ++d) {
        if (eq.level() % d != 0)
            continue;
        Rational o = cusp_order(eq, d);
        if (o < Rational(0))
            rep.all_nonnegative = false;
        rep.orders.emplace_back(d, o);
    }
    return rep;
}

struct ModularityVerdict {
    Rational weight;
    bool cond1_ok;
    bool cond2_ok;
    long long sum_delta_r;
    long long sum_colevel_r;
    bool character_is_trivial;
    CuspOrderReport cusp_report;
    bool is_modular_form;
};

// Assembles the full certificate: both mod-24 conditions, integral positive
// weight, nonnegative order at every divisor cusp. Character triviality is
// established by exhausting one full period (all d in [1, N] coprime to N);
// it is reported but not required for the modular-form verdict.
inline ModularityVerdict modularity_verdict(const EtaQuotient& eq) {
    ModularityVerdict v{};
    v.weight = weight(eq);
    const auto c24 = check_24_conditions(eq);
    v.cond1_ok = c24.first_ok;
    v.cond2_ok = c24.second_ok;
    v.sum_delta_r = c24.sum_delta_r;
    v.sum_colevel_r = c24.sum_colevel_r;
    v.cusp_report = cusp_orders(eq);

    v.character_is_trivial = false;
    if (v.weight.denominator() == 1) {
        v.character_is_trivial = true;
        for (long long d = 1; d <= eq.level(); ++d) {
            if (std::gcd(d, eq.level()) != 1)
                continue;
            if (character_value(eq, d) != 1) {
                v.character_is_trivial = false;
                break;
            }
        }
    }

    const bool weight_positive_integer = v.weight.denominator() == 1 && v.weight.numerator() > 0;
    v.is_modular_form =
        v.cond1_ok && v.cond2_ok && weight_positive_integer && v.cusp_report.all_nonnegative;
    return v;
}

struct SturmBound {
    Rational exact;            // k N / 12 * prod_{p | N} (1 + 1/p)
    long long floor_value;
    long long verify_endpoint; // floor + 1, the inclusive index to check through
};

inline SturmBound sturm_bound(long long k, long long N) {
    if (k < 1 || N < 1)
        throw std::invalid_argument("sturm_bound: weight and level must be positive");
    Rational b(k * N, 12);
    long long n = N;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            b *= Rational(p + 1, p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        b *= Rational(n + 1, n);
    // floor of a nonnegative rational
    const long long fl = b.numerator() / b.denominator();
    return SturmBound{b, fl, fl + 1};
}

// q-expansion q^{sum delta r_delta / 24} * prod (q^delta;q^delta)^{r_delta}
// as a plain integral series. Requires the leading exponent to be a
// nonnegative integer; positive eta powers multiply in sparsely, negative
// powers are gathered into one denominator and inverted once.
inline TruncatedSeries q_expansion(const EtaQuotient& eq, std::size_t precision) {
    const auto c24 = check_24_conditions(eq);
    if (c24.sum_delta_r % 24 != 0)
        throw std::domain_error("q_expansion: sum delta*r = " +
                                std::to_string(c24.sum_delta_r) +
                                " is not divisible by 24; leading exponent not integral");
    const long long offset = c24.sum_delta_r / 24;
    if (offset < 0)
        throw std::domain_error("q_expansion: negative leading exponent " +
                                std::to_string(offset) + "; not a power series in q");
    detail::checked_precision(precision);
    if (static_cast<std::uint64_t>(offset) >= precision)
        return TruncatedSeries(precision); // everything truncated away

    const std::size_t work = precision - static_cast<std::size_t>(offset);
    TruncatedSeries num = TruncatedSeries::one(work);
    TruncatedSeries den = TruncatedSeries::one(work);
    for (const auto& [delta, r] : eq.exponents()) {
        const TruncatedSeries factor = qpochhammer_inf(static_cast<std::uint64_t>(delta), work);
        for (long long i = 0; i < (r > 0 ? r : -r); ++i) {
            if (r > 0)
                num = mul(num, factor);
            else
                den = mul(den, factor);
        }
    }
    TruncatedSeries prod = mul(num, invert(den));
    std::vector<mpz_class> out(precision);
    for (std::size_t i = 0; i < work; ++i)
        out[i + static_cast<std::size_t>(offset)] = prod.coeffs()[i];
    return TruncatedSeries(std::move(out));
}

} // namespace qcong
