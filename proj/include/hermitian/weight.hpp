#pragma once

// Exact minimum distance and weight distribution by exhaustive message enumeration.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <thread>
#include <vector>

#include "onepoint.hpp"

namespace hermitian {

inline constexpr std::uint64_t kDefaultEnumerationGuard = std::uint64_t{1} << 26;

struct WeightOptions {
    std::uint64_t guard = kDefaultEnumerationGuard;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
    /// Enumerate only messages whose first nonzero symbol is 1 (weight is scalar invariant).
    bool scalar_quotient = true;
};

struct DistanceResult {
    long long d = 0;
    std::uint64_t codewords_enumerated = 0;
    std::vector<FieldElement> witness;  // message with weight(message * G) == d
};

namespace detail {

/// Message-space enumerator over a full-rank generator. Messages are split into
/// tasks by their fixed prefix; each task is enumerated depth-first over the
/// remaining coordinates in increasing symbol order.
class MessageEnumerator {
  public:
    struct Task {
        std::vector<std::uint32_t> prefix;
    };

    explicit MessageEnumerator(const FieldMatrix& basis)
        : f_(*basis.field()), k_(basis.rows()), n_(basis.cols()), size_(f_.cardinality()) {
        multiples_.assign(k_ * size_ * n_, 0);
        for (std::size_t j = 0; j < k_; ++j)
            for (std::uint64_t c = 0; c < size_; ++c)
                for (std::size_t col = 0; col < n_; ++col)
                    multiples_[(j * size_ + c) * n_ + col] = f_.mul(static_cast<std::uint32_t>(c), basis.raw(j, col));
    }

    std::size_t k() const { return k_; }
    std::uint64_t alphabet() const { return size_; }

    /// Calls visit(weight, message) for every completion of the task's prefix.
    template <class Visit>
    void run(const Task& task, Visit&& visit) const {
        std::vector<std::uint32_t> message(k_, 0);
        std::vector<std::vector<std::uint32_t>> partial(k_ + 1, std::vector<std::uint32_t>(n_, 0));
        const std::size_t start = task.prefix.size();
        for (std::size_t j = 0; j < start; ++j) {
            message[j] = task.prefix[j];
            accumulate(partial[j], j, message[j], partial[j + 1]);
        }
        descend(start, message, partial, visit);
    }

  private:
    void accumulate(const std::vector<std::uint32_t>& base, std::size_t row, std::uint32_t symbol,
                    std::vector<std::uint32_t>& out) const {
        const std::uint32_t* m = &multiples_[(row * size_ + symbol) * n_];
        for (std::size_t col = 0; col < n_; ++col) out[col] = f_.add(base[col], m[col]);
    }

    template <class Visit>
    void descend(std::size_t depth, std::vector<std::uint32_t>& message,
                 std::vector<std::vector<std::uint32_t>>& partial, Visit& visit) const {
        if (depth == k_) {
            long long w = 0;
            for (auto v : partial[k_]) w += v != 0;
            visit(w, message);
            return;
        }
        if (depth + 1 == k_) {
            const auto& base = partial[depth];
            for (std::uint64_t c = 0; c < size_; ++c) {
                message[depth] = static_cast<std::uint32_t>(c);
                const std::uint32_t* m = &multiples_[(depth * size_ + c) * n_];
                long long w = 0;
                for (std::size_t col = 0; col < n_; ++col) w += f_.add(base[col], m[col]) != 0;
                visit(w, message);
            }
            message[depth] = 0;
            return;
        }
        for (std::uint64_t c = 0; c < size_; ++c) {
            message[depth] = static_cast<std::uint32_t>(c);
            accumulate(partial[depth], depth, message[depth], partial[depth + 1]);
            descend(depth + 1, message, partial, visit);
        }
        message[depth] = 0;
    }

    const FieldSpec& f_;
    std::size_t k_;
    std::size_t n_;
    std::uint64_t size_;
    std::vector<std::uint32_t> multiples_;
};

/// Runs body(task_index) for every task on `threads` workers. Results must be
/// written to per-task slots so the merge order never depends on scheduling.
template <class Body>
void parallel_tasks(std::size_t count, unsigned threads, Body&& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    for (auto& th : pool) th.join();
}

inline FieldMatrix full_rank_generator(const LinearCode& code) {
    if (code.k == 0) throw ZeroCode();
    return code.generator.rows() == code.k ? code.generator : row_space_basis(code.generator);
}

inline void check_enumeration_guard(std::uint64_t alphabet, std::size_t k, std::uint64_t guard) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > guard / alphabet) {
            throw SizeGuard("enumerating " + std::to_string(alphabet) + "^" + std::to_string(k) +
                            " messages exceeds the enumeration guard of " + std::to_string(guard) +
                            " (override with --force-size)");
        }
        total *= alphabet;
    }
}

}  // namespace detail

/// Exact minimum distance of `code`. The witness is the first minimum-weight
/// message in task order, so the result does not depend on the thread count.
inline DistanceResult min_distance_exact(const LinearCode& code, const WeightOptions& opts = {}) {
    const FieldMatrix basis = detail::full_rank_generator(code);
    const std::size_t k = basis.rows();
    const std::uint64_t size = basis.field()->cardinality();
    detail::check_enumeration_guard(size, k, opts.guard);
    const detail::MessageEnumerator en(basis);

    // Task prefixes. Quotient: (0,..,0,1,v) for each leading position; full: each nonzero
    // first symbol, plus the all-zero first symbol split by the rest.
    std::vector<detail::MessageEnumerator::Task> tasks;
    if (opts.scalar_quotient) {
        for (std::size_t lead = 0; lead < k; ++lead) {
            std::vector<std::uint32_t> prefix(lead, 0);
            prefix.push_back(1);
            if (lead + 1 < k) {
                for (std::uint64_t v = 0; v < size; ++v) {
                    auto p = prefix;
                    p.push_back(static_cast<std::uint32_t>(v));
                    tasks.push_back({std::move(p)});
                }
            } else {
                tasks.push_back({std::move(prefix)});
            }
        }
    } else {
        for (std::uint64_t v = 0; v < size; ++v) tasks.push_back({{static_cast<std::uint32_t>(v)}});
    }

    struct Slot {
        long long best = std::numeric_limits<long long>::max();
        std::vector<std::uint32_t> witness;
        std::uint64_t visited = 0;
    };
    std::vector<Slot> slots(tasks.size());
    detail::parallel_tasks(tasks.size(), opts.threads, [&](std::size_t i) {
        Slot& s = slots[i];
        en.run(tasks[i], [&](long long w, const std::vector<std::uint32_t>& msg) {
            if (w == 0 && std::all_of(msg.begin(), msg.end(), [](auto v) { return v == 0; })) return;
            ++s.visited;
            if (w < s.best) {
                s.best = w;
                s.witness = msg;
            }
        });
    });

    DistanceResult r;
    r.d = std::numeric_limits<long long>::max();
    for (const auto& s : slots) {
        r.codewords_enumerated += s.visited;
        if (s.best < r.d) {
            r.d = s.best;
            r.witness.clear();
            for (auto v : s.witness) r.witness.emplace_back(basis.field(), v);
        }
    }
    if (r.d == 0) throw AssertionFailure("nonzero message encoded to the zero codeword");
    return r;
}

/// Weight -> number of codewords, over all (q^2)^k codewords (zero included).
inline std::map<long long, std::uint64_t> weight_distribution(const LinearCode& code, const WeightOptions& opts = {}) {
    const FieldMatrix basis = detail::full_rank_generator(code);
    const std::uint64_t size = basis.field()->cardinality();
    detail::check_enumeration_guard(size, basis.rows(), opts.guard);
    const detail::MessageEnumerator en(basis);
    std::vector<std::vector<std::uint64_t>> counts(size, std::vector<std::uint64_t>(code.n + 1, 0));
    detail::parallel_tasks(size, opts.threads, [&](std::size_t i) {
        en.run({{static_cast<std::uint32_t>(i)}},
               [&](long long w, const std::vector<std::uint32_t>&) { ++counts[i][static_cast<std::size_t>(w)]; });
    });
    std::map<long long, std::uint64_t> dist;
    for (std::size_t w = 0; w <= code.n; ++w) {
        std::uint64_t total = 0;
        for (const auto& c : counts) total += c[w];
        if (total) dist[static_cast<long long>(w)] = total;
    }
    return dist;
}

/// Codeword for a message (length k) under the code's generator.
inline std::vector<FieldElement> encode(const LinearCode& code, const std::vector<FieldElement>& message) {
    const FieldMatrix basis = detail::full_rank_generator(code);
    if (message.size() != basis.rows()) throw RangeError("message length differs from code dimension");
    const Field& f = basis.field();
    std::vector<FieldElement> out(code.n, FieldElement::zero(f));
    for (std::size_t j = 0; j < basis.rows(); ++j)
        for (std::size_t c = 0; c < code.n; ++c) out[c] += message[j] * basis.at(j, c);
    return out;
}

inline long long hamming_weight(const std::vector<FieldElement>& v) {
    return std::count_if(v.begin(), v.end(), [](const FieldElement& x) { return !x.is_zero(); });
}

}  // namespace hermitian
