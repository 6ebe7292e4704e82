// stats.hpp — statistical campaigns over the hash: message mutations,
// diffusion/confusion metrics, collision counting against the binomial
// model, and per-bit uniformity.
//
// Every campaign is seed-deterministic: trial i draws from the SplitMix64
// substream keyed seed ^ i, per-trial results are stored in trial-index
// slots, and aggregation runs in index order. Reports are therefore
// byte-identical for any thread count.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "caqw/digest.hpp"
#include "caqw/message.hpp"
#include "caqw/params.hpp"
#include "caqw/rng.hpp"

namespace caqw::stats {

// --- message mutations -----------------------------------------------------

inline Message mutate_flip(const Message& message, std::size_t index) {
    if (index >= message.size()) throw std::out_of_range("mutate_flip: index out of range");
    std::vector<std::uint8_t> bits = message.bits();
    bits[index] ^= 1u;
    return Message(std::move(bits));
}

inline Message mutate_delete_last(const Message& message) {
    if (message.empty()) throw std::out_of_range("mutate_delete_last: message is empty");
    std::vector<std::uint8_t> bits = message.bits();
    bits.pop_back();
    return Message(std::move(bits));
}

inline Message mutate_insert(const Message& message, std::size_t index, int bit) {
    if (index > message.size()) throw std::out_of_range("mutate_insert: index out of range");
    if (bit != 0 && bit != 1) throw std::invalid_argument("mutate_insert: bit must be 0 or 1");
    std::vector<std::uint8_t> bits = message.bits();
    bits.insert(bits.begin() + static_cast<std::ptrdiff_t>(index),
                static_cast<std::uint8_t>(bit));
    return Message(std::move(bits));
}

// --- digest comparison -----------------------------------------------------

inline std::size_t hamming(const Digest& a, const Digest& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("hamming: digest shapes differ");
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.cells().size(); ++i)
        count += static_cast<std::size_t>(std::popcount(a.cells()[i] ^ b.cells()[i]));
    return count;
}

// number of k-bit cells equal at equal index
inline std::size_t matching_cells(const Digest& a, const Digest& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("matching_cells: digest shapes differ");
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.cells().size(); ++i)
        if (a.cells()[i] == b.cells()[i]) ++count;
    return count;
}

// --- binomial collision model ----------------------------------------------

// Expected number of trials with exactly `omega` matching cells out of
// `cells` under the uniform model:
//   N * binom(cells, omega) * (2^-k)^omega * (1 - 2^-k)^(cells - omega),
// evaluated in the log domain for stability at large cell counts.
inline double theoretical_w(std::uint64_t trials, int cells, int k, int omega) {
    if (cells < 1) throw std::invalid_argument("theoretical_w: cells must be >= 1");
    if (k < 1 || k > 32) throw std::invalid_argument("theoretical_w: k must be in [1, 32]");
    if (omega < 0 || omega > cells)
        throw std::out_of_range("theoretical_w: omega must be in [0, cells]");
    const double log_choose = std::lgamma(cells + 1.0) - std::lgamma(omega + 1.0) -
                              std::lgamma(cells - omega + 1.0);
    const double p_match = std::ldexp(1.0, -k);  // 2^-k, exact
    const double log_prob = omega * std::log(p_match) + (cells - omega) * std::log1p(-p_match);
    return static_cast<double>(trials) * std::exp(log_choose + log_prob);
}

// --- reports ----------------------------------------------------------------

struct DiffusionReport {
    WalkParams params;
    std::uint64_t trials = 0;
    std::size_t msg_len = 0;
    std::uint64_t seed = 0;
    std::size_t bit_length = 0;
    std::vector<std::uint32_t> per_trial_b;  // B_i, retained for audit
    std::uint32_t b_min = 0;
    std::uint32_t b_max = 0;
    double b_mean = 0.0;
    double p_mean_percent = 0.0;
    double delta_b = 0.0;
    double delta_p_percent = 0.0;
};

struct CollisionReport {
    WalkParams params;
    std::uint64_t trials = 0;
    std::size_t msg_len = 0;
    std::uint64_t seed = 0;
    std::size_t cells = 0;
    std::vector<std::uint64_t> observed;  // index omega = 0..cells
    std::vector<double> theoretical;      // W_N(omega)
};

struct UniformReport {
    WalkParams params;
    std::uint64_t trials = 0;
    std::size_t msg_len = 0;
    std::uint64_t seed = 0;
    std::size_t bit_length = 0;
    std::vector<std::uint64_t> counts;  // changed-bit count per digest bit position
    double mean_count = 0.0;
};

// --- campaign machinery ------------------------------------------------------

namespace detail {

struct TrialDigests {
    Digest original;
    Digest mutated;
};

// One campaign trial: fresh random message from substream seed ^ trial,
// one random single-bit flip, both digests.
inline TrialDigests run_trial(const WalkParams& params, std::size_t msg_len, std::uint64_t seed,
                              std::uint64_t trial) {
    SplitMix64 gen(seed ^ trial);
    const Message original = random_message(gen, msg_len);
    const Message mutated = mutate_flip(original, gen.next_below(msg_len));
    return {hash_message(params, original), hash_message(params, mutated)};
}

// Runs per_trial(i) for i in [0, trials), block-partitioned over `threads`
// workers. per_trial must only write state owned by trial i.
template <typename PerTrial>
void run_trials(std::uint64_t trials, unsigned threads, PerTrial&& per_trial) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || trials < 2) {
        for (std::uint64_t i = 0; i < trials; ++i) per_trial(i);
        return;
    }
    const std::uint64_t block = (trials + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t begin = t * block;
        const std::uint64_t end = std::min(trials, begin + block);
        if (begin >= end) break;
        pool.emplace_back([&per_trial, begin, end] {
            for (std::uint64_t i = begin; i < end; ++i) per_trial(i);
        });
    }
    for (auto& worker : pool) worker.join();
}

inline void check_campaign_args(const WalkParams& params, std::uint64_t trials,
                                std::size_t msg_len) {
    params.validate();
    if (trials < 1) throw std::invalid_argument("campaign: trials must be >= 1");
    if (msg_len < 1) throw std::invalid_argument("campaign: msg_len must be >= 1");
}

}  // namespace detail

// --- campaigns ----------------------------------------------------------------

// Diffusion/confusion: B_i = changed digest bits per one-bit message flip.
inline DiffusionReport diffusion_test(const WalkParams& params, std::uint64_t trials,
                                      std::size_t msg_len, std::uint64_t seed,
                                      unsigned threads = 1) {
    detail::check_campaign_args(params, trials, msg_len);

    DiffusionReport report;
    report.params = params;
    report.trials = trials;
    report.msg_len = msg_len;
    report.seed = seed;
    report.bit_length = params.digest_bits();
    report.per_trial_b.assign(trials, 0);

    detail::run_trials(trials, threads, [&](std::uint64_t i) {
        const auto pair = detail::run_trial(params, msg_len, seed, i);
        report.per_trial_b[i] = static_cast<std::uint32_t>(hamming(pair.original, pair.mutated));
    });

    const double bits = static_cast<double>(report.bit_length);
    std::uint64_t sum = 0;
    report.b_min = report.per_trial_b[0];
    report.b_max = report.per_trial_b[0];
    for (std::uint32_t b : report.per_trial_b) {
        sum += b;
        report.b_min = std::min(report.b_min, b);
        report.b_max = std::max(report.b_max, b);
    }
    report.b_mean = static_cast<double>(sum) / static_cast<double>(trials);

    // Standard deviation over N-1; defined as 0 for the degenerate N = 1.
    double sq = 0.0;
    for (std::uint32_t b : report.per_trial_b) {
        const double dev = static_cast<double>(b) - report.b_mean;
        sq += dev * dev;
    }
    report.delta_b = trials > 1 ? std::sqrt(sq / static_cast<double>(trials - 1)) : 0.0;

    // The probability metrics are exact linear rescalings of the bit metrics.
    report.p_mean_percent = report.b_mean / bits * 100.0;
    report.delta_p_percent = report.delta_b / bits * 100.0;
    return report;
}

// Collision structure: matching-cell histogram vs the binomial model.
inline CollisionReport collision_test(const WalkParams& params, std::uint64_t trials,
                                      std::size_t msg_len, std::uint64_t seed,
                                      unsigned threads = 1) {
    detail::check_campaign_args(params, trials, msg_len);

    CollisionReport report;
    report.params = params;
    report.trials = trials;
    report.msg_len = msg_len;
    report.seed = seed;
    report.cells = params.sites();

    std::vector<std::uint32_t> per_trial_omega(trials, 0);
    detail::run_trials(trials, threads, [&](std::uint64_t i) {
        const auto pair = detail::run_trial(params, msg_len, seed, i);
        per_trial_omega[i] = static_cast<std::uint32_t>(matching_cells(pair.original, pair.mutated));
    });

    report.observed.assign(report.cells + 1, 0);
    for (std::uint32_t omega : per_trial_omega) ++report.observed[omega];

    report.theoretical.resize(report.cells + 1);
    for (std::size_t omega = 0; omega <= report.cells; ++omega)
        report.theoretical[omega] =
            theoretical_w(trials, static_cast<int>(report.cells), params.k, static_cast<int>(omega));
    return report;
}

// Uniformity over the hash space: changed-bit count per digest bit position.
inline UniformReport uniform_test(const WalkParams& params, std::uint64_t trials,
                                  std::size_t msg_len, std::uint64_t seed, unsigned threads = 1) {
    detail::check_campaign_args(params, trials, msg_len);

    UniformReport report;
    report.params = params;
    report.trials = trials;
    report.msg_len = msg_len;
    report.seed = seed;
    report.bit_length = params.digest_bits();

    const std::size_t cells = params.sites();
    std::vector<std::uint32_t> per_trial_xor(trials * cells, 0);
    detail::run_trials(trials, threads, [&](std::uint64_t i) {
        const auto pair = detail::run_trial(params, msg_len, seed, i);
        for (std::size_t c = 0; c < cells; ++c)
            per_trial_xor[i * cells + c] = pair.original.cells()[c] ^ pair.mutated.cells()[c];
    });

    report.counts.assign(report.bit_length, 0);
    const int k = params.k;
    for (std::uint64_t i = 0; i < trials; ++i)
        for (std::size_t c = 0; c < cells; ++c) {
            const std::uint32_t diff = per_trial_xor[i * cells + c];
            if (diff == 0) continue;
            for (int j = 0; j < k; ++j)
                if ((diff >> (k - 1 - j)) & 1u)
                    ++report.counts[c * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)];
        }

    std::uint64_t total = 0;
    for (std::uint64_t count : report.counts) total += count;
    report.mean_count = static_cast<double>(total) / static_cast<double>(report.bit_length);
    return report;
}

}  // namespace caqw::stats
