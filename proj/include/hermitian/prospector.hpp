#pragma once

// Existence criteria for one-point-style codes on the Hermitian curve that beat
// the Goppa designed distance, plus the asymptotic evaluator behind the k+d >= n-3
// parameter choice.
//
// A row (l, t) asserts a code with s = l + t, k = l + t - g + 1 and d >= n - l + 1.
// Two sufficient criteria are available:
//   prop23: binom(n, l) q^(2t+2-2g) <= 1
//   exact:  binom(n, l) A_t < h
// prop23 implies exact because A_t < h q^(2t+2-2g).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "onepoint.hpp"
#include "zeta.hpp"

namespace hermitian {

enum class Criterion { Prop23, Exact };

inline std::string to_string(Criterion c) { return c == Criterion::Prop23 ? "prop23" : "exact"; }

inline Criterion parse_criterion(const std::string& s) {
    if (s == "prop23") return Criterion::Prop23;
    if (s == "exact") return Criterion::Exact;
    throw DomainError("unknown criterion '" + s + "' (expected prop23 or exact)");
}

namespace detail {

inline void check_lt(long long q, long long l, long long t) {
    const long long n = code_length(q);
    if (l < 0 || l > n) throw RangeError("l must satisfy 0 <= l <= q^3 = " + std::to_string(n));
    if (t < 0) throw RangeError("t must be nonnegative");
}

/// Shared state for evaluating both criteria over many (l, t) at fixed q.
class CriterionContext {
  public:
    explicit CriterionContext(long long q)
        : q_(q), g_(genus(q)), n_(code_length(q)), h_(class_number(q)),
          binom_(binomial_row(static_cast<unsigned long long>(n_))) {}

    long long q() const { return q_; }
    long long g() const { return g_; }
    long long n() const { return n_; }

    bool prop23(long long l, long long t) const {
        check_lt(q_, l, t);
        const long long e = 2 * g_ - 2 - 2 * t;  // binom <= q^e
        if (e >= 0) return binom_[l] <= qpow(e);
        return binom_[l] * qpow(-e) <= 1;
    }

    bool exact(long long l, long long t) const {
        check_lt(q_, l, t);
        return binom_[l] * a_t(t) < h_;
    }

    bool holds(Criterion c, long long l, long long t) const { return c == Criterion::Prop23 ? prop23(l, t) : exact(l, t); }

  private:
    const BigInt& qpow(long long e) const {
        while (static_cast<long long>(qpow_.size()) <= e)
            qpow_.push_back(qpow_.empty() ? BigInt(1) : qpow_.back() * q_);
        return qpow_[static_cast<std::size_t>(e)];
    }
    const BigInt& a_t(long long t) const {
        while (static_cast<long long>(a_.size()) <= t) a_.push_back(a_k_closed(q_, static_cast<long long>(a_.size())));
        return a_[static_cast<std::size_t>(t)];
    }

    long long q_, g_, n_;
    BigInt h_;
    std::vector<BigInt> binom_;
    mutable std::vector<BigInt> qpow_;
    mutable std::vector<BigInt> a_;
};

}  // namespace detail

/// binom(n, l) q^(2t+2-2g) <= 1, decided in exact integers.
inline bool prop23_holds(long long q, long long l, long long t) {
    detail::check_lt(q, l, t);
    const long long g = genus(q);
    const BigInt b = binomial(static_cast<unsigned long long>(code_length(q)), static_cast<unsigned long long>(l));
    const long long e = 2 * g - 2 - 2 * t;
    if (e >= 0) return b <= big_pow(BigInt(q), static_cast<unsigned>(e));
    return b * big_pow(BigInt(q), static_cast<unsigned>(-e)) <= 1;
}

/// binom(n, l) A_t < h, decided in exact integers.
inline bool exact_criterion_holds(long long q, long long l, long long t) {
    detail::check_lt(q, l, t);
    const BigInt b = binomial(static_cast<unsigned long long>(code_length(q)), static_cast<unsigned long long>(l));
    return b * a_k_closed(q, t) < class_number(q);
}

struct ProspectRow {
    long long l;
    long long t;
    long long s;
    long long k;
    long long d_lower;
    long long goppa_d_lower;
    long long improvement;
    Criterion criterion;

    bool operator==(const ProspectRow&) const = default;
};

inline ProspectRow make_row(long long q, long long l, long long t, Criterion c) {
    const long long n = code_length(q);
    const long long g = genus(q);
    const long long s = l + t;
    return {l, t, s, s - g + 1, n - l + 1, n - s, t + 1, c};
}

struct ProspectReport {
    long long q;
    long long genus;
    long long n;
    Criterion criterion;
    long long k_min;
    long long t_max;
    std::vector<ProspectRow> rows;

    long long best_improvement() const {
        long long best = 0;
        for (const auto& r : rows) best = std::max(best, r.improvement);
        return best;
    }
};

inline constexpr long long kMaxSearchLength = 1 << 18;

struct SearchOptions {
    long long k_min = 1;
    /// Negative selects the default 2g.
    long long t_max = -1;
    /// Restrict to a single l when nonnegative.
    long long only_l = -1;
};

/// Every (l, t) with 1 <= l <= n, 0 <= t <= t_max satisfying the criterion and
/// k >= k_min, sorted by improvement then k, both descending. For fixed l both
/// criteria are monotone in t, so the t-scan stops at the first failure.
inline ProspectReport search(long long q, Criterion criterion, const SearchOptions& opts = {}) {
    const long long g = genus(q);
    const long long n = code_length(q);
    if (n > kMaxSearchLength) throw SizeGuard("search length q^3 exceeds the guard of 262144");
    const long long t_max = opts.t_max < 0 ? 2 * g : opts.t_max;
    ProspectReport rep{q, g, n, criterion, opts.k_min, t_max, {}};
    const detail::CriterionContext ctx(q);
    long long l_lo = 1, l_hi = n;
    if (opts.only_l >= 0) {
        if (opts.only_l > n) throw RangeError("l must satisfy 0 <= l <= q^3");
        l_lo = l_hi = opts.only_l;
    }
    for (long long l = l_lo; l <= l_hi; ++l) {
        for (long long t = 0; t <= t_max; ++t) {
            if (!ctx.holds(criterion, l, t)) break;
            auto row = make_row(q, l, t, criterion);
            if (row.k >= opts.k_min) rep.rows.push_back(row);
        }
    }
    std::sort(rep.rows.begin(), rep.rows.end(), [](const ProspectRow& a, const ProspectRow& b) {
        if (a.improvement != b.improvement) return a.improvement > b.improvement;
        if (a.k != b.k) return a.k > b.k;
        return a.l < b.l;
    });
    return rep;
}

// ---------------------------------------------------------------------------
// Asymptotic evaluator (floating point is confined to this section).

/// Binary entropy -d log2 d - (1-d) log2 (1-d), with H(0) = H(1) = 0.
inline double entropy2(double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) throw DomainError("entropy2 needs 0 <= delta <= 1");
    if (delta == 0.0 || delta == 1.0) return 0.0;
    // log1p keeps the (1-d) term alive when d is far below machine epsilon.
    return -delta * std::log2(delta) - (1.0 - delta) * std::log1p(-delta) / std::log(2.0);
}

inline void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must satisfy 0 < alpha < 1");
}

/// Limit of log_q(binom(n, l) q^(2t+2-2g)) / n for l = n alpha, t = g-1+(theta-1) l:
/// -alpha log_q alpha - (1-alpha) log_q (1-alpha) + 2 alpha (theta - 1).
inline double asymptotic_margin(long long q, double alpha, double theta) {
    require_prime_power(q);
    check_alpha(alpha);
    if (!std::isfinite(theta)) throw DomainError("theta must be finite");
    const double lq = std::log(static_cast<double>(q));
    return -alpha * std::log(alpha) / lq - (1.0 - alpha) * std::log1p(-alpha) / lq + 2.0 * alpha * (theta - 1.0);
}

/// The zero of asymptotic_margin in theta: 1 - log_q(2) H2(alpha) / (2 alpha).
inline double theta_star(long long q, double alpha) {
    require_prime_power(q);
    check_alpha(alpha);
    const double log_q_2 = std::log(2.0) / std::log(static_cast<double>(q));
    return 1.0 - log_q_2 * entropy2(alpha) / (2.0 * alpha);
}

struct AsymptoticOptions {
    /// q^epsilon, i.e. n alpha. Any value > 1 is admissible; 2 is the reference choice.
    double q_eps = 2.0;
    double slack = 1e-6;
};

struct AsymptoticProfile {
    long long q;
    long long genus;
    long long n;
    double q_eps;
    double alpha;
    double theta_star;
    double theta;
    double entropy;
    double margin;
    long long l;
    long long t;
    long long s;
    long long k;
    long long d_lower;
    long long k_plus_d;
    long long improvement;            // t + 1 = d_lower - (n - s)
    long long predicted_improvement;  // g - 4
    bool k_positive;
    bool theta_in_unit_interval;
};

/// Instantiates the large-q parameter choice at a concrete q:
/// alpha = q_eps / q^3, l = floor(q_eps), theta = theta_star - slack,
/// t = g - 1 + floor((theta - 1) l).
inline AsymptoticProfile theorem_profile(long long q, const AsymptoticOptions& opts = {}) {
    const long long g = genus(q);
    if (q < 4) throw RangeError("theorem_profile needs q >= 4");
    if (q > (1LL << 20)) throw RangeError("theorem_profile needs q <= 2^20");
    if (!(opts.q_eps > 1.0) || !std::isfinite(opts.q_eps)) throw DomainError("q_eps must be a finite value > 1");
    if (!(opts.slack >= 0.0) || !std::isfinite(opts.slack)) throw DomainError("slack must be finite and nonnegative");
    const long long n = code_length(q);
    if (opts.q_eps >= static_cast<double>(n)) throw DomainError("q_eps must be below q^3");

    AsymptoticProfile p{};
    p.q = q;
    p.genus = g;
    p.n = n;
    p.q_eps = opts.q_eps;
    p.alpha = opts.q_eps / static_cast<double>(n);
    p.entropy = entropy2(p.alpha);
    p.theta_star = theta_star(q, p.alpha);
    p.theta = p.theta_star - opts.slack;
    p.margin = asymptotic_margin(q, p.alpha, p.theta);
    // n alpha == q_eps exactly; floor it directly rather than the rounded product.
    p.l = static_cast<long long>(std::floor(opts.q_eps));
    p.t = g - 1 + static_cast<long long>(std::floor((p.theta - 1.0) * static_cast<double>(p.l)));
    p.s = p.l + p.t;
    p.k = p.s - g + 1;
    p.d_lower = n - p.l + 1;
    p.k_plus_d = p.k + p.d_lower;
    p.improvement = p.t + 1;
    p.predicted_improvement = g - 4;
    p.k_positive = p.k >= 1;
    p.theta_in_unit_interval = p.theta > 0.0 && p.theta < 1.0;
    return p;
}

}  // namespace hermitian
