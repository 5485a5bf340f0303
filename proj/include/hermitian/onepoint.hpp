#pragma once

// One-point Hermitian codes C_L(t P_inf, D) with D the sum of all q^3 affine points.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curve.hpp"
#include "linalg.hpp"

namespace hermitian {

/// x^a y^b with b < q; pole order q a + (q+1) b at P_inf.
struct Monomial {
    unsigned a = 0;
    unsigned b = 0;

    long long pole_order(long long q) const { return q * a + (q + 1) * b; }
    bool operator==(const Monomial&) const = default;

    std::string to_string() const {
        std::string s;
        if (a) s += a == 1 ? "x" : "x^" + std::to_string(a);
        if (b) s += b == 1 ? "y" : "y^" + std::to_string(b);
        return s.empty() ? "1" : s;
    }

    FieldElement evaluate(const FieldElement& x, const FieldElement& y) const { return x.pow(a) * y.pow(b); }
};

/// Basis of L(t P_inf): all x^a y^b with b <= q-1 and pole order <= t,
/// sorted by pole order (ties by b; cannot occur since pole orders are distinct).
inline std::vector<Monomial> monomial_basis(long long q, long long t) {
    std::vector<Monomial> out;
    if (t < 0) return out;
    for (long long b = 0; b <= q - 1; ++b) {
        for (long long a = 0; q * a + (q + 1) * b <= t; ++a)
            out.push_back({static_cast<unsigned>(a), static_cast<unsigned>(b)});
    }
    std::sort(out.begin(), out.end(), [q](const Monomial& l, const Monomial& r) {
        const auto lo = l.pole_order(q), ro = r.pole_order(q);
        return lo != ro ? lo < ro : l.b < r.b;
    });
    return out;
}

/// dim L(t P_inf), counted from the Weierstrass semigroup <q, q+1>.
inline long long dimension(long long q, long long t) {
    require_prime_power(q);
    return static_cast<long long>(monomial_basis(q, t).size());
}

struct Interval {
    long long lo;  // inclusive
    long long hi;  // exclusive
    bool contains(long long v) const { return lo <= v && v < hi; }
};

inline long long code_length(long long q) { return q * q * q; }

/// Designed distance n - t.
inline long long goppa_bound(long long q, long long t) {
    require_prime_power(q);
    const long long n = code_length(q);
    if (t < 0 || t >= n) throw RangeError("t must satisfy 0 <= t < q^3 = " + std::to_string(n));
    return n - t;
}

/// [q^3 - t, q^3 - t + q): the true minimum distance for 2g-1 < t < q^3.
inline Interval yang_kumar_band(long long q, long long t) {
    const long long g = genus(q);
    const long long n = code_length(q);
    if (t <= 2 * g - 1 || t >= n)
        throw RangeError("distance band needs 2g-1 < t < q^3 (here " + std::to_string(2 * g - 1) + " < t < " +
                         std::to_string(n) + ")");
    return {n - t, n - t + q};
}

/// Linear code over F_{q^2} given by a generator matrix.
struct LinearCode {
    long long q = 0;
    std::size_t n = 0;
    FieldMatrix generator;
    std::size_t k = 0;  // rank of generator
    std::optional<long long> design_degree;
    long long d_lower = 0;
    std::optional<long long> d_exact;

    const Field& field() const { return generator.field(); }
};

inline LinearCode make_linear_code(long long q, FieldMatrix generator, std::optional<long long> design_degree,
                                   long long d_lower) {
    LinearCode c;
    c.q = q;
    c.n = generator.cols();
    c.k = rank(generator);
    c.generator = std::move(generator);
    c.design_degree = design_degree;
    c.d_lower = d_lower;
    return c;
}

/// Evaluation matrix of `basis` at `points` (affine only).
inline FieldMatrix evaluation_matrix(const Field& f, const std::vector<Monomial>& basis,
                                     const std::vector<CurvePoint>& points) {
    FieldMatrix g(f, basis.size(), points.size());
    for (std::size_t c = 0; c < points.size(); ++c) {
        const auto& pt = points[c];
        for (std::size_t r = 0; r < basis.size(); ++r) g.set(r, c, basis[r].evaluate(pt.x(), pt.y()));
    }
    return g;
}

/// C_L(t P_inf, D) over all q^3 affine points in canonical order.
inline LinearCode generator_matrix(long long q, long long t, std::uint64_t guard = kDefaultFieldGuard) {
    const long long d_lower = goppa_bound(q, t);
    const Field f = make_field(q, 1, guard);
    const auto points = affine_points(f);
    const auto basis = monomial_basis(q, t);
    LinearCode code = make_linear_code(q, evaluation_matrix(f, basis, points), t, d_lower);
    if (code.k != basis.size())
        throw AssertionFailure("evaluation map on L(tP_inf) is not injective for q=" + std::to_string(q) +
                               ", t=" + std::to_string(t));
    return code;
}

}  // namespace hermitian
