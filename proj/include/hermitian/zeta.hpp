#pragma once

// Zeta function of the Hermitian curve over F_{q^2}. Being maximal, its
// L-polynomial is (1 + qT)^(2g), so every quantity below is a closed form in q.
// All arithmetic is exact.

#include <cstdint>
#include <vector>

#include "curve.hpp"
#include "integer.hpp"

namespace hermitian {

inline constexpr long long kMaxSeriesDegree = 10000;

/// Coefficients binom(2g, i) q^i of (1 + qT)^(2g), i = 0..2g.
inline std::vector<BigInt> l_polynomial(long long q) {
    const long long g = genus(q);
    auto coeffs = binomial_row(static_cast<unsigned long long>(2 * g));
    BigInt qi = 1;
    for (auto& c : coeffs) {
        c *= qi;
        qi *= q;
    }
    return coeffs;
}

/// h = L(1) = (1 + q)^(2g).
inline BigInt class_number(long long q) {
    const long long g = genus(q);
    return big_pow(BigInt(1 + q), static_cast<unsigned>(2 * g));
}

/// Number of effective divisors of degree k, from the closed form
/// A_k = sum_{i=0}^{k} binom(2g, i) (q^(2k+2-2i) - 1) / (q^2 - 1) q^i.
inline BigInt a_k_closed(long long q, long long k) {
    const long long g = genus(q);
    if (k < 0) throw RangeError("k must be nonnegative");
    const BigInt q2m1 = BigInt(q) * q - 1;
    BigInt total = 0;
    const long long top = std::min(k, 2 * g);
    for (long long i = 0; i <= top; ++i) {
        const BigInt num = big_pow(BigInt(q), static_cast<unsigned>(2 * k + 2 - 2 * i)) - 1;
        if (num % q2m1 != 0) throw AssertionFailure("geometric sum not divisible by q^2 - 1");
        total += binomial(2 * g, i) * (num / q2m1) * big_pow(BigInt(q), static_cast<unsigned>(i));
    }
    return total;
}

/// A_0..A_kmax as the power-series coefficients of L(T) / ((1 - T)(1 - q^2 T)).
inline std::vector<BigInt> a_k_series(long long q, long long kmax) {
    if (kmax < 0) throw RangeError("kmax must be nonnegative");
    if (kmax > kMaxSeriesDegree) throw SizeGuard("kmax exceeds the series guard of 10000");
    const auto L = l_polynomial(q);
    const auto len = static_cast<std::size_t>(kmax + 1);
    // 1/(1-T)(1-q^2T) = sum_j (sum_{i<=j} q^{2i}) T^j
    std::vector<BigInt> denom_inv(len);
    BigInt power = 1, running = 0;
    for (std::size_t j = 0; j < len; ++j) {
        running += power;
        denom_inv[j] = running;
        power *= BigInt(q) * q;
    }
    std::vector<BigInt> out(len, 0);
    for (std::size_t i = 0; i < L.size() && i < len; ++i)
        for (std::size_t j = 0; i + j < len; ++j) out[i + j] += L[i] * denom_inv[j];
    return out;
}

/// Rational points over F_{q^{2m}} read off the L-polynomial: q^{2m} + 1 - 2g(-q)^m.
inline BigInt point_count_from_zeta(long long q, unsigned m) {
    const long long g = genus(q);
    BigInt root_power = big_pow(BigInt(q), m);
    if (m % 2 == 1) root_power = -root_power;
    return big_pow(BigInt(q), 2 * m) + 1 - 2 * BigInt(g) * root_power;
}

struct AkBoundReport {
    long long q;
    long long k;
    BigInt a_k;
    /// h * q^e with e = 2k+2-2g, represented as numerator / denominator (one of them a power of q).
    BigInt bound_numerator;
    BigInt bound_denominator;
    bool holds;
};

/// Exact test of A_k < h q^(2k+2-2g); negative exponents are cross-multiplied.
inline AkBoundReport check_Ak_bound(long long q, long long k) {
    const long long g = genus(q);
    AkBoundReport r{q, k, a_k_closed(q, k), class_number(q), 1, false};
    const long long e = 2 * k + 2 - 2 * g;
    if (e >= 0) {
        r.bound_numerator *= big_pow(BigInt(q), static_cast<unsigned>(e));
    } else {
        r.bound_denominator = big_pow(BigInt(q), static_cast<unsigned>(-e));
    }
    r.holds = r.a_k * r.bound_denominator < r.bound_numerator;
    return r;
}

struct ZetaProfile {
    long long q;
    long long genus;
    std::vector<BigInt> l_polynomial;
    BigInt class_number;
    std::vector<BigInt> a;  // A_0..A_kmax
};

inline ZetaProfile zeta_profile(long long q, long long kmax) {
    ZetaProfile z{q, genus(q), l_polynomial(q), class_number(q), {}};
    if (kmax < 0) throw RangeError("kmax must be nonnegative");
    if (kmax > kMaxSeriesDegree) throw SizeGuard("kmax exceeds the series guard of 10000");
    z.a.reserve(static_cast<std::size_t>(kmax + 1));
    for (long long k = 0; k <= kmax; ++k) z.a.push_back(a_k_closed(q, k));
    return z;
}

}  // namespace hermitian
