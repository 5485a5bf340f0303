#include "hermitian/weight.hpp"

#include <gtest/gtest.h>

namespace hermitian {
namespace {

/// Independent oracle: odometer over every message, encoded with FieldElement arithmetic.
std::map<long long, std::uint64_t> naive_distribution(const LinearCode& code) {
    const Field& f = code.field();
    const std::size_t k = code.generator.rows();
    std::vector<std::uint32_t> digits(k, 0);
    std::map<long long, std::uint64_t> dist;
    while (true) {
        long long w = 0;
        for (std::size_t c = 0; c < code.n; ++c) {
            auto v = FieldElement::zero(f);
            for (std::size_t j = 0; j < k; ++j) v += FieldElement(f, digits[j]) * code.generator.at(j, c);
            w += !v.is_zero();
        }
        ++dist[w];
        std::size_t pos = 0;
        while (pos < k && ++digits[pos] == f->cardinality()) digits[pos++] = 0;
        if (pos == k) break;
    }
    return dist;
}

long long min_positive(const std::map<long long, std::uint64_t>& dist) {
    for (const auto& [w, c] : dist)
        if (w > 0) return w;
    return 0;
}

TEST(MinDistance, RepetitionCode) {
    const auto code = generator_matrix(2, 0);
    const auto r = min_distance_exact(code);
    EXPECT_EQ(r.d, 8);
    EXPECT_EQ(r.codewords_enumerated, 1u);  // one normalized nonzero message
    EXPECT_EQ(weight_distribution(code), (std::map<long long, std::uint64_t>{{0, 1}, {8, 3}}));
}

TEST(MinDistance, FrozenValuesMatchNaiveOracle) {
    // (q, t, d) with d computed by naive_distribution below.
    const std::vector<std::tuple<long long, long long, long long>> frozen{
        {2, 2, 6}, {2, 3, 5}, {2, 4, 4}, {2, 5, 3}, {2, 6, 2}, {2, 7, 2}, {3, 6, 21}, {3, 7, 20}};
    for (const auto& [q, t, d] : frozen) {
        const auto code = generator_matrix(q, t);
        EXPECT_EQ(min_positive(naive_distribution(code)), d) << "oracle q=" << q << " t=" << t;
        EXPECT_EQ(min_distance_exact(code).d, d) << "q=" << q << " t=" << t;
    }
}

TEST(MinDistance, WitnessHasMinimumWeight) {
    for (long long t : {2, 3, 5, 7}) {
        const auto code = generator_matrix(2, t);
        const auto r = min_distance_exact(code);
        EXPECT_EQ(hamming_weight(encode(code, r.witness)), r.d);
        EXPECT_GE(r.d, 1);
        EXPECT_LE(r.d, static_cast<long long>(code.n));
    }
}

TEST(MinDistance, QuotientAndFullEnumerationAgree) {
    for (long long t : {2, 3, 5}) {
        const auto code = generator_matrix(2, t);
        WeightOptions full;
        full.scalar_quotient = false;
        const auto a = min_distance_exact(code);
        const auto b = min_distance_exact(code, full);
        EXPECT_EQ(a.d, b.d);
        const std::uint64_t total = 1ull << (2 * code.k);
        EXPECT_EQ(b.codewords_enumerated, total - 1);
        EXPECT_EQ(a.codewords_enumerated, (total - 1) / 3);
    }
}

TEST(MinDistance, ThreadCountDoesNotChangeResult) {
    const auto code = generator_matrix(3, 8);
    WeightOptions one, many;
    one.threads = 1;
    many.threads = 5;
    const auto a = min_distance_exact(code, one);
    const auto b = min_distance_exact(code, many);
    EXPECT_EQ(a.d, b.d);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.codewords_enumerated, b.codewords_enumerated);
    EXPECT_EQ(weight_distribution(generator_matrix(2, 4), one), weight_distribution(generator_matrix(2, 4), many));
}

TEST(MinDistance, GuardAndZeroCode) {
    const auto code = generator_matrix(3, 12);  // k = 10, 9^10 messages
    EXPECT_THROW(min_distance_exact(code), SizeGuard);
    WeightOptions small;
    small.guard = 100;
    EXPECT_THROW(min_distance_exact(generator_matrix(2, 5), small), SizeGuard);

    LinearCode zero = make_linear_code(2, FieldMatrix(make_field(2, 1), 1, 4), std::nullopt, 0);
    EXPECT_EQ(zero.k, 0u);
    EXPECT_THROW(min_distance_exact(zero), ZeroCode);
}

TEST(MinDistance, RedundantGeneratorRowsAreReduced) {
    const Field f = make_field(2, 1);
    FieldMatrix g(f, 2, 3);
    for (std::size_t c = 0; c < 3; ++c) {
        g.set_raw(0, c, 1);
        g.set_raw(1, c, 1);
    }
    const auto code = make_linear_code(2, g, std::nullopt, 1);
    EXPECT_EQ(code.k, 1u);
    EXPECT_EQ(min_distance_exact(code).d, 3);
}

TEST(WeightDistribution, MatchesOracleAndSums) {
    for (long long t : {2, 3, 5}) {
        const auto code = generator_matrix(2, t);
        const auto dist = weight_distribution(code);
        EXPECT_EQ(dist, naive_distribution(code));
        std::uint64_t total = 0;
        for (const auto& [w, c] : dist) total += c;
        EXPECT_EQ(total, 1ull << (2 * code.k));
        EXPECT_EQ(dist.at(0), 1u);
        EXPECT_EQ(min_positive(dist), min_distance_exact(code).d);
    }
    std::uint64_t total = 0;
    for (const auto& [w, c] : weight_distribution(generator_matrix(2, 5))) total += c;
    EXPECT_EQ(total, 1024u);
}

TEST(MinDistance, GoppaSoundnessAndBandForAllValidT) {
    for (long long q : {2, 3}) {
        const long long g = genus(q);
        for (long long t = 0; t < q * q * q; ++t) {
            const auto code = generator_matrix(q, t);
            if (std::pow(double(q * q), double(code.k)) > 5e6) continue;
            const long long d = min_distance_exact(code).d;
            EXPECT_GE(d, goppa_bound(q, t)) << "q=" << q << " t=" << t;
            if (t > 2 * g - 1) {
                EXPECT_TRUE(yang_kumar_band(q, t).contains(d)) << "q=" << q << " t=" << t;
            }
        }
    }
}

}  // namespace
}  // namespace hermitian
