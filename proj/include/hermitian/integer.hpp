#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace hermitian {

using BigInt = boost::multiprecision::cpp_int;

struct PrimePower {
    std::uint64_t p;
    unsigned e;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Decomposes q = p^e, or nothing if q is not a prime power.
inline std::optional<PrimePower> prime_power(long long q) {
    if (q < 2) return std::nullopt;
    auto n = static_cast<std::uint64_t>(q);
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{n, 1};
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) return std::nullopt;
    return PrimePower{p, e};
}

inline PrimePower require_prime_power(long long q) {
    auto pp = prime_power(q);
    if (!pp) throw NotPrimePower(q);
    return *pp;
}

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline BigInt binomial(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Row n of Pascal's triangle: binom(n, 0..n).
inline std::vector<BigInt> binomial_row(unsigned long long n) {
    std::vector<BigInt> row;
    row.reserve(n + 1);
    row.emplace_back(1);
    for (unsigned long long k = 1; k <= n; ++k) row.push_back(row.back() * (n - k + 1) / k);
    return row;
}

/// Overflow-checked integer power for small exact quantities (point counts, lengths).
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw RangeError("integer overflow in power");
        r *= base;
    }
    return r;
}

}  // namespace hermitian
