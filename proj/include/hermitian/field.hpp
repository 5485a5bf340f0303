#pragma once

// Finite fields F_{q^{2m}} for the Hermitian-curve machinery.
//
// A field of cardinality p^D is represented as F_p[w]/(f(w)) with f the lowest
// monic irreducible polynomial of degree D, ordered by its coefficient vector
// read from the highest non-leading coefficient down. Elements are stored as
// the base-p integer c_0 + c_1 p + ... + c_{D-1} p^{D-1} of their coefficient
// vector, so the natural integer order is the coefficient-lexicographic order
// and equality is a plain integer comparison.

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace hermitian {

inline constexpr std::uint64_t kDefaultFieldGuard = std::uint64_t{1} << 24;
/// Hard ceiling: element indices are 32-bit.
inline constexpr std::uint64_t kMaxFieldCardinality = std::uint64_t{1} << 31;

namespace detail {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

inline void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo the monic polynomial mod, over F_p.
inline Poly poly_rem(Poly a, const Poly& mod, std::uint32_t p) {
    poly_trim(a);
    const std::size_t dm = mod.size() - 1;
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t lead = a.back();
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = lead * mod[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        poly_trim(a);
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    poly_trim(r);
    return r;
}

/// Monic polynomial of the given degree whose lower coefficients are the base-p digits of code.
inline Poly monic_from_code(std::uint64_t code, unsigned degree, std::uint32_t p) {
    Poly f(degree + 1, 0);
    for (unsigned i = 0; i < degree; ++i) {
        f[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    f[degree] = 1;
    return f;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    const unsigned degree = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= degree; ++d) {
        const std::uint64_t count = checked_pow(p, d);
        for (std::uint64_t code = 0; code < count; ++code) {
            if (poly_rem(f, monic_from_code(code, d, p), p).empty()) return false;
        }
    }
    return true;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// Immutable description of F_{q^{2m}} plus the lookup tables used by arithmetic.
///
/// All arithmetic kernels work on raw element indices; FieldElement wraps them
/// with a reference to the owning spec.
class FieldSpec {
  public:
    std::uint32_t characteristic() const { return p_; }
    /// Degree over the prime field.
    unsigned degree() const { return degree_; }
    /// Monic modulus, lowest coefficient first, length degree()+1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::uint64_t cardinality() const { return cardinality_; }
    /// The distinguished subfield size q.
    std::uint64_t subfield_size() const { return q_; }
    /// Extension degree m with cardinality() == q^(2m).
    unsigned m() const { return m_; }

    bool same_as(const FieldSpec& other) const {
        return this == &other || (p_ == other.p_ && modulus_ == other.modulus_ && q_ == other.q_);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[std::size_t{a} * cardinality_ + b];
        return add_digits(a, b);
    }
    std::uint32_t neg(std::uint32_t a) const { return p_ == 2 ? a : neg_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
        const std::uint64_t order = cardinality_ - 1;
        if (e >= order) e -= order;
        return exp_[e];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw DivisionByZero();
        const std::uint64_t order = cardinality_ - 1;
        return exp_[(order - log_[a]) % order];
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        const std::uint64_t order = cardinality_ - 1;
        return exp_[static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a]) * e) % order)];
    }

    /// Element index from a coefficient vector (lowest degree first).
    std::uint32_t index_of(const std::vector<std::uint32_t>& coeffs) const {
        std::uint64_t v = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) v = v * p_ + coeffs[i] % p_;
        if (v >= cardinality_) throw RangeError("coefficient vector longer than field degree");
        return static_cast<std::uint32_t>(v);
    }

    std::vector<std::uint32_t> coefficients(std::uint32_t a) const {
        std::vector<std::uint32_t> c(degree_, 0);
        for (unsigned i = 0; i < degree_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }

    /// Index of the prime-field element n mod p.
    std::uint32_t from_int(long long n) const {
        const long long r = ((n % static_cast<long long>(p_)) + p_) % p_;
        return static_cast<std::uint32_t>(r);
    }

    /// Coefficient vector joined with ':' (lowest degree first), e.g. "1:1" for w+1.
    std::string coefficient_string(std::uint32_t a) const {
        std::string s;
        const auto c = coefficients(a);
        for (unsigned i = 0; i < degree_; ++i) {
            if (i) s += ':';
            s += std::to_string(c[i]);
        }
        return s;
    }

    /// Polynomial in w, highest degree first, e.g. "w^2+2w+1".
    std::string pretty(std::uint32_t a) const {
        if (a == 0) return "0";
        const auto c = coefficients(a);
        std::string s;
        for (unsigned i = degree_; i-- > 0;) {
            if (c[i] == 0) continue;
            if (!s.empty()) s += '+';
            if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
            if (i >= 1) s += 'w';
            if (i >= 2) s += '^' + std::to_string(i);
        }
        return s;
    }

    static Field create(long long q, unsigned m, std::uint64_t guard);

  private:
    FieldSpec() = default;

    std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t r = 0, scale = 1;
        for (unsigned i = 0; i < degree_; ++i) {
            r += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return static_cast<std::uint32_t>(r);
    }

    detail::Poly as_poly(std::uint32_t a) const {
        auto c = coefficients(a);
        detail::poly_trim(c);
        return c;
    }

    std::uint32_t from_poly(const detail::Poly& a) const {
        std::uint64_t v = 0;
        for (std::size_t i = a.size(); i-- > 0;) v = v * p_ + a[i];
        return static_cast<std::uint32_t>(v);
    }

    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
        return from_poly(detail::poly_rem(detail::poly_mul(as_poly(a), as_poly(b), p_), modulus_, p_));
    }

    std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables();

    std::uint32_t p_ = 2;
    unsigned degree_ = 1;
    std::vector<std::uint32_t> modulus_;
    std::uint64_t cardinality_ = 2;
    std::uint64_t q_ = 2;
    unsigned m_ = 1;

    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint32_t> add_table_;
};

inline Field FieldSpec::create(long long q, unsigned m, std::uint64_t guard) {
    const PrimePower pp = require_prime_power(q);
    if (m == 0) throw RangeError("extension degree m must be positive");
    const unsigned degree = 2 * m * pp.e;
    const std::uint64_t limit = guard < kMaxFieldCardinality ? guard : kMaxFieldCardinality;
    // Compare via repeated multiplication so huge requests do not overflow.
    std::uint64_t card = 1;
    for (unsigned i = 0; i < degree; ++i) {
        if (card > limit / pp.p) {
            throw SizeGuard("field F_{" + std::to_string(q) + "^" + std::to_string(2 * m) +
                            "} exceeds the size guard of " + std::to_string(limit) + " elements");
        }
        card *= pp.p;
    }

    std::shared_ptr<FieldSpec> f(new FieldSpec());
    f->p_ = static_cast<std::uint32_t>(pp.p);
    f->degree_ = degree;
    f->cardinality_ = card;
    f->q_ = static_cast<std::uint64_t>(q);
    f->m_ = m;

    const std::uint64_t codes = card;  // p^degree candidate lower-coefficient vectors
    for (std::uint64_t code = 0; code < codes; ++code) {
        // Highest non-leading coefficient is the most significant digit of code.
        auto candidate = detail::monic_from_code(code, degree, f->p_);
        if (candidate[0] == 0) continue;  // divisible by w
        if (detail::is_irreducible(candidate, f->p_)) {
            f->modulus_ = std::move(candidate);
            break;
        }
    }
    if (f->modulus_.empty()) throw AssertionFailure("no irreducible modulus found");
    f->build_tables();
    return f;
}

inline void FieldSpec::build_tables() {
    const std::uint64_t order = cardinality_ - 1;
    const auto primes = detail::distinct_prime_factors(order);
    std::uint32_t gen = 0;
    for (std::uint64_t c = 1; c < cardinality_ && gen == 0; ++c) {
        const auto cand = static_cast<std::uint32_t>(c);
        bool primitive = order == 1 ? cand == 1 : true;
        for (auto r : primes) {
            if (slow_pow(cand, order / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) gen = cand;
    }
    if (gen == 0) throw AssertionFailure("no primitive element found");

    exp_.assign(order, 0);
    log_.assign(cardinality_, 0);
    const auto gpoly = as_poly(gen);
    detail::Poly cur{1};
    for (std::uint64_t i = 0; i < order; ++i) {
        const std::uint32_t v = from_poly(cur);
        exp_[i] = v;
        log_[v] = static_cast<std::uint32_t>(i);
        cur = detail::poly_rem(detail::poly_mul(cur, gpoly, p_), modulus_, p_);
    }

    if (p_ != 2) {
        neg_.assign(cardinality_, 0);
        for (std::uint64_t a = 0; a < cardinality_; ++a) {
            std::uint64_t r = 0, scale = 1, x = a;
            for (unsigned i = 0; i < degree_; ++i) {
                r += ((p_ - x % p_) % p_) * scale;
                x /= p_;
                scale *= p_;
            }
            neg_[a] = static_cast<std::uint32_t>(r);
        }
        if (cardinality_ <= 1024) {
            add_table_.assign(cardinality_ * cardinality_, 0);
            for (std::uint64_t a = 0; a < cardinality_; ++a)
                for (std::uint64_t b = 0; b < cardinality_; ++b)
                    add_table_[a * cardinality_ + b] =
                        add_digits(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
        }
    }
}

/// F_{q^{2m}} with a deterministic modulus. Throws NotPrimePower or SizeGuard.
inline Field make_field(long long q, unsigned m = 1, std::uint64_t guard = kDefaultFieldGuard) {
    return FieldSpec::create(q, m, guard);
}

/// Value type for an element of a FieldSpec.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(Field spec, std::uint32_t value) : spec_(std::move(spec)), value_(value) {
        if (!spec_) throw FieldMismatch();
        if (value_ >= spec_->cardinality()) throw RangeError("element index out of range");
    }

    static FieldElement zero(const Field& f) { return {f, 0}; }
    static FieldElement one(const Field& f) { return {f, 1}; }
    /// The image of an integer in the prime field.
    static FieldElement from_int(const Field& f, long long n) { return {f, f->from_int(n)}; }
    static FieldElement from_coefficients(const Field& f, const std::vector<std::uint32_t>& c) {
        return {f, f->index_of(c)};
    }
    /// The residue class of w, or 0 in the prime field case (degree 1 has no w).
    static FieldElement generator_w(const Field& f) { return {f, f->degree() > 1 ? f->characteristic() : 0}; }

    const Field& spec() const { return spec_; }
    std::uint32_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    std::vector<std::uint32_t> coefficients() const { return spec_->coefficients(value_); }
    std::string to_string() const { return spec_->pretty(value_); }

    FieldElement operator+(const FieldElement& o) const { return {spec_, spec_->add(value_, check(o))}; }
    FieldElement operator-(const FieldElement& o) const { return {spec_, spec_->sub(value_, check(o))}; }
    FieldElement operator*(const FieldElement& o) const { return {spec_, spec_->mul(value_, check(o))}; }
    FieldElement operator/(const FieldElement& o) const {
        return {spec_, spec_->mul(value_, spec_->inv(check(o)))};
    }
    FieldElement operator-() const { return {spec_, spec_->neg(value_)}; }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement inv() const { return {spec_, spec_->inv(value_)}; }
    FieldElement pow(std::uint64_t e) const { return {spec_, spec_->pow(value_, e)}; }

    bool operator==(const FieldElement& o) const { return value_ == o.value_ && same_field(o); }
    /// Coefficient-lexicographic order within one field.
    std::strong_ordering operator<=>(const FieldElement& o) const { return value_ <=> o.value_; }

    bool same_field(const FieldElement& o) const {
        return spec_ && o.spec_ && spec_->same_as(*o.spec_);
    }

  private:
    std::uint32_t check(const FieldElement& o) const {
        if (!same_field(o)) throw FieldMismatch();
        return o.value_;
    }

    Field spec_;
    std::uint32_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

/// x -> x^q.
inline FieldElement frobenius(const FieldElement& x) { return x.pow(x.spec()->subfield_size()); }

/// True when x lies in the distinguished subfield F_q.
inline bool in_subfield(const FieldElement& x) { return frobenius(x) == x; }

inline void require_quadratic(const FieldElement& x) {
    if (x.spec()->m() != 1) throw WrongField("norm/trace to F_q are defined on F_{q^2} only (m = 1)");
}

/// N(x) = x^(q+1), the norm from F_{q^2} down to F_q.
inline FieldElement norm_to_subfield(const FieldElement& x) {
    require_quadratic(x);
    return x.pow(x.spec()->subfield_size() + 1);
}

/// Tr(y) = y^q + y, the trace from F_{q^2} down to F_q.
inline FieldElement trace_to_subfield(const FieldElement& y) {
    require_quadratic(y);
    return frobenius(y) + y;
}

/// Every element in index (coefficient-lexicographic) order.
inline std::vector<FieldElement> enumerate_elements(const Field& f, std::uint64_t guard = kDefaultFieldGuard) {
    if (f->cardinality() > guard)
        throw SizeGuard("enumerating " + std::to_string(f->cardinality()) + " elements exceeds the size guard");
    std::vector<FieldElement> out;
    out.reserve(f->cardinality());
    for (std::uint64_t i = 0; i < f->cardinality(); ++i) out.emplace_back(f, static_cast<std::uint32_t>(i));
    return out;
}

}  // namespace hermitian
