#pragma once

// Divisor classes on the genus-1 Hermitian curve y^2 + y = x^3 over F_4 (q = 2),
// and a constructive check of the class-counting existence argument for codes
// with d >= n - m + 1.
//
// With P_inf as the identity, the nine rational points form the group Z/3 x Z/3
// and the Abel-Jacobi map sends a divisor to (degree, group sum of its points).
// Effective divisors of degree <= 2 are exactly sums of rational points because
// the curve has no places of degree 2.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "onepoint.hpp"
#include "weight.hpp"

namespace hermitian::picard {

inline constexpr long long kToyQ = 2;
inline constexpr long long kToyGenus = 1;
inline constexpr long long kToyClassNumber = 9;
inline constexpr long long kMaxFreeDegree = 2;

using ECPoint = CurvePoint;

struct ToyCurve {
    Field field;
    std::vector<ECPoint> affine;    // 8 points, canonical order
    std::vector<ECPoint> rational;  // affine followed by P_inf
};

inline const ToyCurve& toy_curve() {
    static const ToyCurve curve = [] {
        ToyCurve c;
        c.field = make_field(kToyQ, 1);
        c.affine = affine_points(c.field);
        c.rational = c.affine;
        c.rational.push_back(ECPoint::infinity());
        return c;
    }();
    return curve;
}

inline void require_on_toy_curve(const ECPoint& p) {
    if (p.is_infinity()) return;
    if (!p.x().spec()->same_as(*toy_curve().field) || !on_hermitian_curve(p, kToyQ))
        throw DomainError("point " + p.to_string() + " is not on y^2 + y = x^3 over F_4");
}

// Group law for y^2 + y = x^3, i.e. long Weierstrass form with a3 = 1 and
// a1 = a2 = a4 = a6 = 0.

inline ECPoint ec_neg(const ECPoint& p) {
    require_on_toy_curve(p);
    if (p.is_infinity()) return p;
    const auto one = FieldElement::one(p.y().spec());
    return ECPoint::affine(p.x(), -p.y() - one);
}

inline ECPoint ec_add(const ECPoint& a, const ECPoint& b) {
    require_on_toy_curve(a);
    require_on_toy_curve(b);
    if (a.is_infinity()) return b;
    if (b.is_infinity()) return a;
    const Field& f = a.x().spec();
    const auto one = FieldElement::one(f);
    const auto& x1 = a.x();
    const auto& y1 = a.y();
    const auto& x2 = b.x();
    const auto& y2 = b.y();
    if (x1 == x2 && y2 == -y1 - one) return ECPoint::infinity();
    FieldElement lambda;
    if (a == b) {
        lambda = FieldElement::from_int(f, 3) * x1 * x1 / (FieldElement::from_int(f, 2) * y1 + one);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    const auto x3 = lambda * lambda - x1 - x2;
    const auto y3 = lambda * (x1 - x3) - y1 - one;
    return ECPoint::affine(x3, y3);
}

inline ECPoint ec_scalar_mul(const ECPoint& p, long long n) {
    ECPoint base = n < 0 ? ec_neg(p) : p;
    unsigned long long k = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1 : static_cast<unsigned long long>(n);
    ECPoint acc = ECPoint::infinity();
    while (k) {
        if (k & 1) acc = ec_add(acc, base);
        base = ec_add(base, base);
        k >>= 1;
    }
    return acc;
}

/// Formal sum of rational points with nonzero integer multiplicities.
class Divisor {
  public:
    Divisor() = default;
    Divisor(std::initializer_list<std::pair<ECPoint, long long>> terms) {
        for (const auto& [p, n] : terms) add(p, n);
    }

    Divisor& add(const ECPoint& p, long long n = 1) {
        require_on_toy_curve(p);
        if (n == 0) return *this;
        auto& slot = terms_[p];
        slot += n;
        if (slot == 0) terms_.erase(p);
        return *this;
    }

    long long degree() const {
        long long d = 0;
        for (const auto& [p, n] : terms_) d += n;
        return d;
    }
    bool is_effective() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
    }
    long long multiplicity(const ECPoint& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? 0 : it->second;
    }
    const std::map<ECPoint, long long>& terms() const { return terms_; }

    bool operator==(const Divisor&) const = default;

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [p, n] : terms_) {
            if (!s.empty()) s += " + ";
            if (n != 1) s += std::to_string(n) + "*";
            s += p.to_string();
        }
        return s;
    }

  private:
    std::map<ECPoint, long long> terms_;
};

/// A degree-s divisor class, identified by its Abel-Jacobi point.
struct PicClass {
    long long degree;
    ECPoint z;
    bool operator==(const PicClass&) const = default;
};

inline PicClass class_of(const Divisor& d) {
    ECPoint z = ECPoint::infinity();
    for (const auto& [p, n] : d.terms()) z = ec_add(z, ec_scalar_mul(p, n));
    return {d.degree(), z};
}

/// All effective divisors of the given degree supported on the 9 rational points.
inline std::vector<Divisor> effective_divisors(long long degree) {
    if (degree < 0) throw RangeError("degree must be nonnegative");
    const auto& pts = toy_curve().rational;
    std::vector<Divisor> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(degree), 0);
    // Nondecreasing index sequences enumerate multisets.
    while (true) {
        Divisor d;
        for (auto i : idx) d.add(pts[i]);
        out.push_back(std::move(d));
        std::size_t pos = idx.size();
        while (pos > 0 && idx[pos - 1] == pts.size() - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < idx.size(); ++j) idx[j] = idx[pos - 1];
    }
    return out;
}

namespace detail {

/// Calls visit(subset) for every size-m subset of items, in lexicographic index order.
template <class T, class Visit>
void for_each_subset(const std::vector<T>& items, std::size_t m, Visit&& visit) {
    if (m > items.size()) return;
    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    std::vector<T> chosen(m);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) chosen[i] = items[idx[i]];
        visit(chosen);
        std::size_t pos = m;
        while (pos > 0 && idx[pos - 1] == items.size() - m + pos - 1) --pos;
        if (pos == 0) return;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline void check_eval_set(const std::vector<ECPoint>& eval_set) {
    std::set<ECPoint> seen;
    for (const auto& p : eval_set) {
        if (p.is_infinity()) throw DomainError("evaluation points must be affine");
        require_on_toy_curve(p);
        if (!seen.insert(p).second) throw DomainError("evaluation points must be distinct");
    }
}

inline void check_sm(const std::vector<ECPoint>& eval_set, long long s, long long m) {
    check_eval_set(eval_set);
    if (m < 0 || m > static_cast<long long>(eval_set.size()))
        throw RangeError("m must satisfy 0 <= m <= |eval_set|");
    if (s < m) throw RangeError("s must be at least m");
    if (s - m > kMaxFreeDegree)
        throw ScopeError("s - m = " + std::to_string(s - m) +
                         " exceeds 2; effective divisors of that degree need places of degree > 1");
}

}  // namespace detail

/// Abel-Jacobi points of all classes [sum_{P in I} P + D] with I a size-m subset of
/// eval_set and D effective of degree s - m.
inline std::set<ECPoint> hit_classes(const std::vector<ECPoint>& eval_set, long long s, long long m) {
    detail::check_sm(eval_set, s, m);
    const auto free_parts = effective_divisors(s - m);
    std::vector<ECPoint> free_sums;
    for (const auto& d : free_parts) free_sums.push_back(class_of(d).z);
    std::set<ECPoint> hit;
    detail::for_each_subset(eval_set, static_cast<std::size_t>(m), [&](const std::vector<ECPoint>& subset) {
        ECPoint base = ECPoint::infinity();
        for (const auto& p : subset) base = ec_add(base, p);
        for (const auto& z : free_sums) hit.insert(ec_add(base, z));
    });
    return hit;
}

/// N_{s,m}: the number of distinct hit classes.
inline long long count_hit_classes(const std::vector<ECPoint>& eval_set, long long s, long long m) {
    return static_cast<long long>(hit_classes(eval_set, s, m).size());
}

/// The first degree-s class (canonical point order) missed by every hit, if any.
inline std::optional<PicClass> find_good_class(const std::vector<ECPoint>& eval_set, long long s, long long m) {
    const auto hit = hit_classes(eval_set, s, m);
    for (const auto& z : toy_curve().rational)
        if (!hit.count(z)) return PicClass{s, z};
    return std::nullopt;
}

/// G = sum n_i R_i + inf_mult * P_inf with distinct affine R_i and n_i != 0.
/// inf_mult may be negative; G need not be effective.
struct Representative {
    std::vector<std::pair<ECPoint, long long>> affine;
    long long inf_mult = 0;

    long long degree() const {
        long long d = inf_mult;
        for (const auto& [p, n] : affine) d += n;
        return d;
    }
    Divisor divisor() const {
        Divisor d;
        for (const auto& [p, n] : affine) d.add(p, n);
        d.add(ECPoint::infinity(), inf_mult);
        return d;
    }
};

/// Z + (s-1) P_inf, or s P_inf when Z is the identity.
inline Representative canonical_representative(const PicClass& c) {
    if (c.degree < 1) throw RangeError("class degree must be at least 1");
    require_on_toy_curve(c.z);
    if (c.z.is_infinity()) return {{}, c.degree};
    return {{{c.z, 1}}, c.degree - 1};
}

/// A representative of c supported on P_inf and the affine points outside
/// eval_set. Candidates sum n_i R_i with n_i in {0, 1, 2} are tried by increasing
/// sum n_i, then in odometer order over the spare points; the canonical
/// Z + (s-1) P_inf therefore wins whenever Z avoids eval_set.
inline std::optional<Representative> try_representative_avoiding(const PicClass& c,
                                                                  const std::vector<ECPoint>& eval_set) {
    if (c.degree < 1) throw RangeError("class degree must be at least 1");
    require_on_toy_curve(c.z);
    const std::set<ECPoint> avoid(eval_set.begin(), eval_set.end());
    std::vector<ECPoint> spare;
    for (const auto& p : toy_curve().affine)
        if (!avoid.count(p)) spare.push_back(p);
    const long long r = static_cast<long long>(spare.size());
    for (long long total = 0; total <= 2 * r; ++total) {
        std::vector<long long> mult(spare.size(), 0);
        while (true) {
            long long sum = 0;
            ECPoint z = ECPoint::infinity();
            for (std::size_t i = 0; i < spare.size(); ++i) {
                sum += mult[i];
                z = ec_add(z, ec_scalar_mul(spare[i], mult[i]));
            }
            if (sum == total && z == c.z) {
                Representative rep{{}, c.degree - total};
                for (std::size_t i = 0; i < spare.size(); ++i)
                    if (mult[i]) rep.affine.emplace_back(spare[i], mult[i]);
                return rep;
            }
            std::size_t pos = 0;
            while (pos < mult.size() && ++mult[pos] == 3) mult[pos++] = 0;
            if (pos == mult.size()) break;
        }
    }
    return std::nullopt;
}

inline Representative representative_avoiding(const PicClass& c, const std::vector<ECPoint>& eval_set) {
    if (auto rep = try_representative_avoiding(c, eval_set)) return *rep;
    throw ScopeError("class has no representative supported on rational points outside the evaluation set");
}

namespace detail {

// Truncated power series in the local parameter u = x - x_P at an affine point P.
// Every affine point is smooth with dF/dy = 1, so u is a uniformizer there.
using Series = std::vector<FieldElement>;

inline Series series_mul(const Series& a, const Series& b) {
    Series out(a.size(), FieldElement::zero(a.front().spec()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline Series series_pow(const Series& a, unsigned e) {
    Series out(a.size(), FieldElement::zero(a.front().spec()));
    out[0] = FieldElement::one(a.front().spec());
    for (unsigned i = 0; i < e; ++i) out = series_mul(out, a);
    return out;
}

/// x and y at P as series in u, to `len` terms. With y = y_P + v, the curve
/// equation in characteristic 2 reads v = (x^3 - x_P^3) + v^2, which converges
/// u-adically by iteration since v has no constant term.
inline std::pair<Series, Series> local_coordinates(const ECPoint& p, std::size_t len) {
    const Field& f = p.x().spec();
    Series x(len, FieldElement::zero(f));
    x[0] = p.x();
    if (len > 1) x[1] = FieldElement::one(f);
    Series rhs = series_pow(x, 3);
    rhs[0] -= p.x().pow(3);
    Series v(len, FieldElement::zero(f));
    for (std::size_t it = 0; it < len; ++it) {
        Series next = series_mul(v, v);
        for (std::size_t i = 0; i < len; ++i) next[i] += rhs[i];
        v = std::move(next);
    }
    v[0] += p.y();
    return {x, v};
}

inline Series numerator_series(const std::vector<std::pair<FieldElement, Monomial>>& numerator, const ECPoint& p,
                               std::size_t len) {
    const auto [x, y] = local_coordinates(p, len);
    Series out(len, FieldElement::zero(p.x().spec()));
    for (const auto& [c, m] : numerator) {
        const Series term = series_mul(series_pow(x, m.a), series_pow(y, m.b));
        for (std::size_t i = 0; i < len; ++i) out[i] += c * term[i];
    }
    return out;
}

}  // namespace detail

/// f = (sum c_i x^a_i y^b_i) / prod_j (x - x_j), roots listed with multiplicity.
struct RationalFunction {
    std::vector<std::pair<FieldElement, Monomial>> numerator;
    std::vector<FieldElement> denominator_roots;

    /// Pole order at P_inf: the numerator's pole order minus 2 per denominator factor.
    long long pole_order_at_infinity() const {
        long long top = -1;
        for (const auto& [c, mono] : numerator) top = std::max(top, mono.pole_order(kToyQ));
        return top - 2 * static_cast<long long>(denominator_roots.size());
    }

    FieldElement numerator_at(const FieldElement& x, const FieldElement& y) const {
        auto v = FieldElement::zero(x.spec());
        for (const auto& [c, mono] : numerator) v += c * mono.evaluate(x, y);
        return v;
    }

    /// Order of vanishing at an affine point (a large sentinel for f = 0).
    long long order_at(const ECPoint& p) const {
        if (p.is_infinity()) return -pole_order_at_infinity();
        const auto den = denominator_order(p);
        const auto s = detail::numerator_series(numerator, p, static_cast<std::size_t>(den + kSeriesSlack));
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!s[i].is_zero()) return static_cast<long long>(i) - den;
        return kSeriesSlack;
    }

    /// Value at an affine point where f has no pole. Where numerator and
    /// denominator both vanish, the value is the ratio of leading coefficients in u.
    FieldElement evaluate(const ECPoint& p) const {
        if (p.is_infinity()) throw DomainError("evaluation at P_inf is not supported");
        const Field& f = p.x().spec();
        const auto den = denominator_order(p);
        auto rest = FieldElement::one(f);
        for (const auto& r : denominator_roots)
            if (r != p.x()) rest *= p.x() - r;
        if (den == 0) return numerator_at(p.x(), p.y()) / rest;
        const auto s = detail::numerator_series(numerator, p, static_cast<std::size_t>(den + 1));
        for (long long i = 0; i < den; ++i)
            if (!s[static_cast<std::size_t>(i)].is_zero()) throw DomainError("pole of basis function at " + p.to_string());
        return s[static_cast<std::size_t>(den)] / rest;
    }

    std::string to_string() const {
        std::string num;
        for (const auto& [c, mono] : numerator) {
            if (!num.empty()) num += " + ";
            const bool constant = mono.a == 0 && mono.b == 0;
            if (constant) {
                const auto cs = c.to_string();
                num += cs.find('+') == std::string::npos ? cs : "(" + cs + ")";
                continue;
            }
            if (!c.is_one()) num += "(" + c.to_string() + ")*";
            num += mono.to_string();
        }
        if (num.empty()) num = "0";
        if (denominator_roots.empty()) return num;
        std::string den;
        for (const auto& r : denominator_roots) {
            const auto rs = r.to_string();
            den += "(x - " + (rs.find('+') == std::string::npos ? rs : "(" + rs + ")") + ")";
        }
        return "(" + num + ") / " + den;
    }

  private:
    static constexpr long long kSeriesSlack = 8;

    long long denominator_order(const ECPoint& p) const {
        return std::count(denominator_roots.begin(), denominator_roots.end(), p.x());
    }
};

namespace detail {

/// Divides g0(x) + g1(x) y by (x - root) when both parts vanish at root.
inline bool try_cancel(std::vector<std::pair<FieldElement, Monomial>>& numerator, const FieldElement& root) {
    const Field& f = root.spec();
    unsigned max_a = 0;
    for (const auto& [c, m] : numerator) max_a = std::max(max_a, m.a);
    std::vector<std::vector<FieldElement>> parts(kToyQ, std::vector<FieldElement>(max_a + 1, FieldElement::zero(f)));
    for (const auto& [c, m] : numerator) parts[m.b][m.a] += c;
    std::vector<std::vector<FieldElement>> quotients;
    for (const auto& poly : parts) {
        // Synthetic division, highest degree first.
        std::vector<FieldElement> quot(poly.size() > 1 ? poly.size() - 1 : 0, FieldElement::zero(f));
        auto carry = FieldElement::zero(f);
        for (std::size_t i = poly.size(); i-- > 0;) {
            const auto coeff = poly[i] + carry * root;
            if (i == 0) {
                if (!coeff.is_zero()) return false;
            } else {
                quot[i - 1] = coeff;
            }
            carry = coeff;
        }
        quotients.push_back(std::move(quot));
    }
    numerator.clear();
    for (unsigned b = 0; b < quotients.size(); ++b)
        for (unsigned a = 0; a < quotients[b].size(); ++a)
            if (!quotients[b][a].is_zero()) numerator.push_back({quotients[b][a], Monomial{a, b}});
    std::sort(numerator.begin(), numerator.end(),
              [](const auto& l, const auto& r) { return l.second.pole_order(kToyQ) < r.second.pole_order(kToyQ); });
    return true;
}

}  // namespace detail

/// Basis of L(G) for G = sum n_i R_i + e P_inf of degree s >= 1.
/// With a_i = max(n_i, 0) and h = prod (x - x_{R_i})^{a_i}, f = g / h lies in L(G)
/// iff g is a polynomial in L((2 sum a_i + e) P_inf) vanishing to order
/// a_i - n_i at R_i and a_i at -R_i (div(x - x_R) = R + (-R) - 2 P_inf).
/// Those orders become linear conditions on the monomial coefficients of g via
/// local expansions. Common factors x - x_i are cancelled where possible.
inline std::vector<RationalFunction> l_basis(const Representative& g) {
    const long long s = g.degree();
    if (s < 1) throw RangeError("deg G must be at least 1");
    std::set<ECPoint> seen;
    for (const auto& [p, n] : g.affine) {
        if (p.is_infinity()) throw DomainError("representative points must be affine");
        require_on_toy_curve(p);
        if (n == 0) throw DomainError("representative multiplicities must be nonzero");
        if (!seen.insert(p).second) throw DomainError("representative points must be distinct");
    }
    const Field& f = toy_curve().field;
    std::map<ECPoint, long long> vanish;
    std::vector<FieldElement> roots;
    long long total_a = 0;
    for (const auto& [p, n] : g.affine) {
        const long long a = std::max(n, 0LL);
        total_a += a;
        for (long long i = 0; i < a; ++i) roots.push_back(p.x());
        if (a - n > 0) vanish[p] += a - n;
        if (a > 0) vanish[ec_neg(p)] += a;
    }
    const long long top = 2 * total_a + g.inf_mult;
    const auto monos = monomial_basis(kToyQ, top);

    std::size_t rows = 0;
    for (const auto& [p, c] : vanish) rows += static_cast<std::size_t>(c);
    FieldMatrix constraint(f, rows, monos.size());
    std::size_t row = 0;
    for (const auto& [p, c] : vanish) {
        const auto len = static_cast<std::size_t>(c);
        for (std::size_t j = 0; j < monos.size(); ++j) {
            const auto s_j = detail::numerator_series({{FieldElement::one(f), monos[j]}}, p, len);
            for (std::size_t i = 0; i < len; ++i) constraint.set(row + i, j, s_j[i]);
        }
        row += len;
    }
    const auto kernel = null_space(constraint);
    if (static_cast<long long>(kernel.size()) != s)
        throw AssertionFailure("L(G) has dimension " + std::to_string(kernel.size()) + ", expected " +
                               std::to_string(s));

    const Divisor div_g = g.divisor();
    std::vector<RationalFunction> basis;
    for (const auto& v : kernel) {
        RationalFunction fn;
        for (std::size_t j = 0; j < monos.size(); ++j)
            if (v[j] != 0) fn.numerator.push_back({FieldElement(f, v[j]), monos[j]});
        for (const auto& root : roots)
            if (!detail::try_cancel(fn.numerator, root)) fn.denominator_roots.push_back(root);
        // div(f) + G >= 0 at every rational point; all zeros of h are rational.
        for (const auto& p : toy_curve().rational)
            if (fn.order_at(p) + div_g.multiplicity(p) < 0)
                throw AssertionFailure("basis function " + fn.to_string() + " has a pole beyond G at " + p.to_string());
        basis.push_back(std::move(fn));
    }
    return basis;
}

/// Basis of L(Z + (s-1) P_inf).
inline std::vector<RationalFunction> l_basis(const ECPoint& z, long long s) {
    if (s < 1) throw RangeError("s must be at least 1");
    return l_basis(canonical_representative(PicClass{s, z}));
}

/// The first `size` affine points in canonical order.
inline std::vector<ECPoint> default_eval_set(std::size_t size) {
    const auto& pts = toy_curve().affine;
    if (size < 1 || size > pts.size()) throw RangeError("evaluation set size must be between 1 and 8");
    return {pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(size)};
}

struct LemmaReport {
    std::vector<ECPoint> eval_set;
    long long s = 0;
    long long m = 0;
    long long n = 0;
    long long hit_count = 0;  // N_{s,m}
    long long class_number = kToyClassNumber;
    std::optional<PicClass> good_class;
    std::optional<Representative> representative;
    std::vector<RationalFunction> basis;
    std::optional<LinearCode> code;
    std::optional<DistanceResult> distance;
    long long required_distance = 0;  // n - m + 1
    bool passed = false;
};

/// Takes the first unhit class (canonical order) that has a representative
/// supported off eval_set, builds the code from L(G) on eval_set, and confirms
/// k = s and exact d >= n - m + 1. When every class is hit the report carries no
/// class and passed = false. Unhit classes without such a representative raise
/// ScopeError (only possible when few affine points are spare). A failed
/// confirmation throws AssertionFailure.
inline LemmaReport build_and_verify(const std::vector<ECPoint>& eval_set, long long s, long long m,
                                    const WeightOptions& opts = {}) {
    if (s < 1) throw RangeError("s must be at least 1");
    LemmaReport rep;
    rep.eval_set = eval_set;
    rep.s = s;
    rep.m = m;
    rep.n = static_cast<long long>(eval_set.size());
    rep.required_distance = rep.n - m + 1;
    const auto hit = hit_classes(eval_set, s, m);
    rep.hit_count = static_cast<long long>(hit.size());
    bool any_unhit = false;
    for (const auto& z : toy_curve().rational) {
        if (hit.count(z)) continue;
        any_unhit = true;
        if (auto r = try_representative_avoiding(PicClass{s, z}, eval_set)) {
            rep.good_class = PicClass{s, z};
            rep.representative = std::move(r);
            break;
        }
    }
    if (!any_unhit) return rep;
    if (!rep.good_class)
        throw ScopeError("no unhit class has a representative supported on rational points outside the evaluation set");

    if (class_of(rep.representative->divisor()) != *rep.good_class)
        throw AssertionFailure("representative lies in the wrong class");
    rep.basis = l_basis(*rep.representative);

    const Field& f = toy_curve().field;
    FieldMatrix g(f, rep.basis.size(), eval_set.size());
    for (std::size_t r = 0; r < rep.basis.size(); ++r)
        for (std::size_t c = 0; c < eval_set.size(); ++c) g.set(r, c, rep.basis[r].evaluate(eval_set[c]));
    rep.code = make_linear_code(kToyQ, std::move(g), s, rep.required_distance);
    const long long expected_k = s - kToyGenus + 1;
    if (static_cast<long long>(rep.code->k) != expected_k)
        throw AssertionFailure("constructed code has dimension " + std::to_string(rep.code->k) + ", expected " +
                               std::to_string(expected_k));
    rep.distance = min_distance_exact(*rep.code, opts);
    rep.code->d_exact = rep.distance->d;
    if (rep.distance->d < rep.required_distance)
        throw AssertionFailure("constructed code has distance " + std::to_string(rep.distance->d) + " < " +
                               std::to_string(rep.required_distance));
    rep.passed = true;
    return rep;
}

}  // namespace hermitian::picard
