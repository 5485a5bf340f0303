#include "hermitian/prospector.hpp"

#include <gtest/gtest.h>

#include <tuple>

namespace hermitian {
namespace {

// Oracle pieces computed without the library's binomial row, q-power cache or closed form.
BigInt oracle_binom(long long n, long long k) {
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt oracle_pow(long long b, long long e) {
    BigInt r = 1;
    for (long long i = 0; i < e; ++i) r *= b;
    return r;
}

bool oracle_prop23(long long q, long long l, long long t) {
    const long long g = (q * q - q) / 2;
    const long long e = 2 * t + 2 - 2 * g;
    const BigInt lhs = oracle_binom(q * q * q, l);
    return e >= 0 ? lhs * oracle_pow(q, e) <= 1 : lhs <= oracle_pow(q, -e);
}

bool oracle_exact(long long q, long long l, long long t, const std::vector<BigInt>& a) {
    const long long g = (q * q - q) / 2;
    return oracle_binom(q * q * q, l) * a[static_cast<std::size_t>(t)] < oracle_pow(1 + q, 2 * g);
}

/// Every (l, t) without early exit, filtered and ordered as documented.
std::vector<std::tuple<long long, long long>> oracle_search(long long q, Criterion c, long long k_min) {
    const long long g = (q * q - q) / 2, n = q * q * q;
    const auto a = a_k_series(q, 2 * g);
    std::vector<std::tuple<long long, long long, long long, long long>> rows;  // (-improvement, -k, l, t)
    for (long long l = 1; l <= n; ++l)
        for (long long t = 0; t <= 2 * g; ++t) {
            const bool ok = c == Criterion::Prop23 ? oracle_prop23(q, l, t) : oracle_exact(q, l, t, a);
            const long long k = l + t - g + 1;
            if (ok && k >= k_min) rows.emplace_back(-(t + 1), -k, l, t);
        }
    std::sort(rows.begin(), rows.end());
    std::vector<std::tuple<long long, long long>> out;
    for (const auto& [ni, nk, l, t] : rows) out.emplace_back(l, t);
    return out;
}

std::vector<std::tuple<long long, long long>> lt_of(const ProspectReport& r) {
    std::vector<std::tuple<long long, long long>> out;
    for (const auto& row : r.rows) out.emplace_back(row.l, row.t);
    return out;
}

TEST(Prop23, Examples) {
    EXPECT_TRUE(prop23_holds(4, 3, 1));
    EXPECT_FALSE(prop23_holds(4, 3, 2));
    for (long long q : {2, 3, 4, 5}) EXPECT_TRUE(prop23_holds(q, 0, genus(q) - 1));
    EXPECT_THROW(prop23_holds(2, 9, 0), RangeError);
    EXPECT_THROW(prop23_holds(2, -1, 0), RangeError);
    EXPECT_THROW(prop23_holds(2, 1, -1), RangeError);
    EXPECT_THROW(prop23_holds(6, 1, 0), NotPrimePower);
}

TEST(ExactCriterion, Examples) {
    EXPECT_TRUE(exact_criterion_holds(2, 1, 0));
    EXPECT_FALSE(exact_criterion_holds(2, 2, 0));
    EXPECT_FALSE(exact_criterion_holds(2, 0, 1));
    EXPECT_THROW(exact_criterion_holds(2, 9, 0), RangeError);
}

TEST(Criteria, MatchOracleAndImplication) {
    for (long long q : {2, 3, 4, 5, 7, 8}) {
        const long long g = genus(q);
        const auto a = a_k_series(q, 2 * g);
        const detail::CriterionContext ctx(q);
        for (long long l = 0; l <= std::min<long long>(32, q * q * q); ++l)
            for (long long t = 0; t <= 2 * g; ++t) {
                const bool p = prop23_holds(q, l, t);
                const bool e = exact_criterion_holds(q, l, t);
                ASSERT_EQ(p, oracle_prop23(q, l, t)) << q << "," << l << "," << t;
                ASSERT_EQ(e, oracle_exact(q, l, t, a)) << q << "," << l << "," << t;
                ASSERT_EQ(p, ctx.prop23(l, t));
                ASSERT_EQ(e, ctx.exact(l, t));
                if (p) {
                    ASSERT_TRUE(e) << q << "," << l << "," << t;
                }
            }
    }
}

TEST(Criteria, MonotoneInT) {
    for (long long q : {2, 3, 4, 5}) {
        const long long g = genus(q);
        for (long long l = 0; l <= std::min<long long>(40, q * q * q); ++l)
            for (long long t = 1; t <= 2 * g; ++t) {
                if (prop23_holds(q, l, t)) { ASSERT_TRUE(prop23_holds(q, l, t - 1)); }
                if (exact_criterion_holds(q, l, t)) { ASSERT_TRUE(exact_criterion_holds(q, l, t - 1)); }
            }
    }
}

// Both criteria depend on l only through binom(n, l), which is symmetric, so l = n
// (binom = 1) and l = n - 1 (binom = n) behave like l = 0 and l = 1.
TEST(Search, Q2) {
    const auto exact = search(2, Criterion::Exact);
    EXPECT_EQ(lt_of(exact), (std::vector<std::tuple<long long, long long>>{{8, 0}, {7, 0}, {1, 0}}));
    const auto& row = exact.rows.back();
    EXPECT_EQ(row, (ProspectRow{1, 0, 1, 1, 8, 7, 1, Criterion::Exact}));
    const auto prop = search(2, Criterion::Prop23);
    EXPECT_EQ(lt_of(prop), (std::vector<std::tuple<long long, long long>>{{8, 0}}));
    EXPECT_EQ(prop.rows[0].d_lower, 1);
    EXPECT_EQ(prop.rows[0].k, 8);
}

TEST(Search, NoRowAwayFromTheEndsAtQ2AndQ4) {
    for (const auto& r : search(2, Criterion::Prop23).rows) EXPECT_EQ(r.l, 8);
    const auto r4 = search(4, Criterion::Prop23);
    for (const auto& r : r4.rows) EXPECT_GE(r.l, 60);
}

TEST(Search, MatchesExhaustiveOracle) {
    for (long long q : {2, 3, 4, 5})
        for (auto c : {Criterion::Prop23, Criterion::Exact})
            for (long long k_min : {1, 3}) {
                SearchOptions opts;
                opts.k_min = k_min;
                EXPECT_EQ(lt_of(search(q, c, opts)), oracle_search(q, c, k_min)) << q << " " << to_string(c);
            }
}

TEST(Search, RowIdentities) {
    for (long long q : {2, 3, 4, 5})
        for (auto c : {Criterion::Prop23, Criterion::Exact}) {
            const auto rep = search(q, c);
            const long long g = genus(q), n = code_length(q);
            for (const auto& r : rep.rows) {
                EXPECT_EQ(r.s, r.l + r.t);
                EXPECT_EQ(r.k, r.s - g + 1);
                EXPECT_GE(r.k, 1);
                EXPECT_EQ(r.d_lower - r.goppa_d_lower, r.t + 1);
                EXPECT_EQ(r.k + r.d_lower, n + r.t - g + 2);
                EXPECT_EQ(r.improvement, r.t + 1);
                EXPECT_EQ(r.criterion, c);
            }
        }
}

TEST(Search, OptionsAndGuards) {
    SearchOptions only;
    only.only_l = 1;
    EXPECT_EQ(lt_of(search(2, Criterion::Exact, only)), (std::vector<std::tuple<long long, long long>>{{1, 0}}));
    only.only_l = 9;
    EXPECT_THROW(search(2, Criterion::Exact, only), RangeError);
    EXPECT_THROW(search(128, Criterion::Exact), SizeGuard);  // n = 2^21
    EXPECT_EQ(search(3, Criterion::Exact).t_max, 6);
    EXPECT_EQ(parse_criterion("exact"), Criterion::Exact);
    EXPECT_EQ(parse_criterion("prop23"), Criterion::Prop23);
    EXPECT_THROW(parse_criterion("other"), DomainError);
}

TEST(Entropy2, Values) {
    EXPECT_DOUBLE_EQ(entropy2(0.5), 1.0);
    EXPECT_EQ(entropy2(0.0), 0.0);
    EXPECT_EQ(entropy2(1.0), 0.0);
    EXPECT_NEAR(entropy2(0.25), 0.8112781244591328, 1e-12);
    EXPECT_THROW(entropy2(-0.1), DomainError);
    EXPECT_THROW(entropy2(1.5), DomainError);
}

TEST(AsymptoticMargin, Signs) {
    EXPECT_NEAR(asymptotic_margin(4, 0.5, 0.5), 0.0, 1e-12);
    EXPECT_LT(asymptotic_margin(4, 0.5, 0.4), 0.0);
    EXPECT_GT(asymptotic_margin(4, 0.5, 0.6), 0.0);
    EXPECT_THROW(asymptotic_margin(4, 0.0, 0.5), DomainError);
    EXPECT_THROW(asymptotic_margin(4, 1.0, 0.5), DomainError);
}

TEST(ThetaStar, ValuesAndLimit) {
    EXPECT_NEAR(theta_star(4, 0.5), 0.5, 1e-12);
    EXPECT_NEAR(theta_star(2, 0.5), 0.0, 1e-12);
    for (long long q : {2, 3, 4, 16, 1024})
        for (double a : {0.01, 0.2, 0.5, 0.9}) EXPECT_NEAR(asymptotic_margin(q, a, theta_star(q, a)), 0.0, 1e-9);
    // alpha = 2 / q^3 drives theta* towards -1/2, from below at rate ~0.22 / log2(q).
    const double q = 1 << 20;
    EXPECT_NEAR(theta_star(1 << 20, 2.0 / (q * q * q)), -0.5 - 0.5 * (1.0 / std::log(2.0) - 1.0) / 20.0, 1e-6);
    EXPECT_NEAR(theta_star(1 << 20, 2.0 / (q * q * q)), -0.5, 0.02);
    EXPECT_LT(std::abs(theta_star(1 << 20, 2.0 / (q * q * q)) + 0.5), std::abs(theta_star(16, 2.0 / 4096) + 0.5));
}

TEST(TheoremProfile, Q16) {
    const auto p = theorem_profile(16);
    EXPECT_EQ(p.l, 2);
    EXPECT_GE(p.improvement, p.genus - 6);
    EXPECT_LE(p.improvement, p.genus - 3);
    EXPECT_EQ(p.predicted_improvement, p.genus - 4);
    EXPECT_EQ(p.k_plus_d, p.n + p.t - p.genus + 2);
    EXPECT_FALSE(p.k_positive);
    EXPECT_FALSE(p.theta_in_unit_interval);
    EXPECT_LT(p.margin, 0.0);
}

TEST(TheoremProfile, Q4AndGuards) {
    const auto p = theorem_profile(4);
    EXPECT_EQ(p.l, 2);
    for (double v : {p.alpha, p.theta_star, p.theta, p.entropy, p.margin}) EXPECT_TRUE(std::isfinite(v));
    EXPECT_EQ(p.k_plus_d, p.n + p.t - p.genus + 2);
    EXPECT_THROW(theorem_profile(3), RangeError);
    EXPECT_THROW(theorem_profile(2), RangeError);
    AsymptoticOptions bad;
    bad.q_eps = 1.0;
    EXPECT_THROW(theorem_profile(4, bad), DomainError);
}

TEST(TheoremProfile, IdentityAcrossQ) {
    for (long long q : {4, 5, 7, 8, 9, 16, 32, 64, 128, 256}) {
        const auto p = theorem_profile(q);
        EXPECT_EQ(p.k_plus_d - (p.n + p.t - p.genus + 2), 0) << q;
        EXPECT_EQ(p.d_lower - (p.n - p.s), p.improvement) << q;
        EXPECT_EQ(p.margin < 0.0, p.theta < p.theta_star) << q;
    }
}

}  // namespace
}  // namespace hermitian
