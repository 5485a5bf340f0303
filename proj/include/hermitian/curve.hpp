#pragma once

// The Hermitian curve y^q + y = x^(q+1) over F_{q^2}.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "field.hpp"

namespace hermitian {

/// A rational point: the single point at infinity, or an affine (x, y).
class CurvePoint {
  public:
    CurvePoint() = default;  // infinity

    static CurvePoint infinity() { return {}; }
    static CurvePoint affine(FieldElement x, FieldElement y) {
        if (!x.same_field(y)) throw FieldMismatch();
        CurvePoint p;
        p.coords_ = Coords{std::move(x), std::move(y)};
        return p;
    }

    bool is_infinity() const { return !coords_.has_value(); }
    const FieldElement& x() const { return affine_coords().x; }
    const FieldElement& y() const { return affine_coords().y; }

    bool operator==(const CurvePoint& o) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
        return x() == o.x() && y() == o.y();
    }

    /// Affine points by (x, y) lexicographically, infinity last.
    std::strong_ordering operator<=>(const CurvePoint& o) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() <=> o.is_infinity();
        if (auto c = x() <=> o.x(); c != 0) return c;
        return y() <=> o.y();
    }

    std::string to_string() const {
        if (is_infinity()) return "P_inf";
        return "(" + x().to_string() + ", " + y().to_string() + ")";
    }

  private:
    struct Coords {
        FieldElement x, y;
    };
    const Coords& affine_coords() const {
        if (!coords_) throw DomainError("point at infinity has no affine coordinates");
        return *coords_;
    }
    std::optional<Coords> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const CurvePoint& p) { return os << p.to_string(); }

struct CurveProfile {
    long long q;
    long long genus;
    std::uint64_t rational_points;
};

/// g = (q^2 - q) / 2.
inline long long genus(long long q) {
    require_prime_power(q);
    return (q * q - q) / 2;
}

inline CurveProfile curve_profile(long long q) {
    const long long g = genus(q);
    return {q, g, checked_pow(static_cast<std::uint64_t>(q), 3) + 1};
}

/// y^q + y == x^(q+1) in whatever field the coordinates live in.
inline bool on_hermitian_curve(const CurvePoint& pt, long long q) {
    if (pt.is_infinity()) return true;
    const auto uq = static_cast<std::uint64_t>(q);
    return pt.y().pow(uq) + pt.y() == pt.x().pow(uq + 1);
}

/// All q^3 affine points over the field F_{q^2} `f`, ordered by x then y.
inline std::vector<CurvePoint> affine_points(const Field& f) {
    if (f->m() != 1) throw WrongField("affine_points expects F_{q^2}");
    const std::uint64_t q = f->subfield_size();
    const auto elems = enumerate_elements(f);
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> fibers;
    for (const auto& y : elems) fibers[trace_to_subfield(y).value()].push_back(y.value());
    std::vector<CurvePoint> out;
    out.reserve(q * q * q);
    for (const auto& x : elems) {
        auto it = fibers.find(norm_to_subfield(x).value());
        if (it == fibers.end()) continue;
        for (auto yv : it->second) out.push_back(CurvePoint::affine(x, FieldElement(f, yv)));
    }
    return out;
}

inline std::vector<CurvePoint> affine_points(long long q, std::uint64_t guard = kDefaultFieldGuard) {
    return affine_points(make_field(q, 1, guard));
}

/// Projective count of points over F_{q^{2m}}, by direct enumeration: 1 + #{(x, y)}.
inline std::uint64_t count_points_extension(long long q, unsigned m, std::uint64_t guard = kDefaultFieldGuard) {
    const Field f = make_field(q, m, guard);
    const auto uq = static_cast<std::uint64_t>(q);
    std::vector<std::uint64_t> lhs_count(f->cardinality(), 0);
    for (std::uint64_t y = 0; y < f->cardinality(); ++y) {
        const auto yv = static_cast<std::uint32_t>(y);
        ++lhs_count[f->add(f->pow(yv, uq), yv)];
    }
    std::uint64_t affine = 0;
    for (std::uint64_t x = 0; x < f->cardinality(); ++x) affine += lhs_count[f->pow(static_cast<std::uint32_t>(x), uq + 1)];
    return affine + 1;
}

struct HasseWeilReport {
    long long q;
    long long genus;
    std::uint64_t field_size;  // q^2
    std::uint64_t bound;       // q^2 + 1 + 2 g q
    std::uint64_t count;       // enumerated rational points
    bool within_bound;
    bool maximal;
};

/// Compares the enumerated rational-point count with the Hasse-Weil bound over F_{q^2}.
inline HasseWeilReport hasse_weil_check(long long q, std::uint64_t guard = kDefaultFieldGuard) {
    const long long g = genus(q);
    const auto uq = static_cast<std::uint64_t>(q);
    const std::uint64_t bound = uq * uq + 1 + 2 * static_cast<std::uint64_t>(g) * uq;
    const std::uint64_t count = affine_points(q, guard).size() + 1;
    return {q, g, uq * uq, bound, count, count <= bound, count == bound};
}

}  // namespace hermitian
