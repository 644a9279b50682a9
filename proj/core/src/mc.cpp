#include "pdwbc/mc.hpp"

#include "pdwbc/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

namespace pdwbc {

namespace {

struct StreamTally {
    std::vector<std::uint64_t> counts;
    std::uint64_t flagged = 0;
};

long column_cap(int s, double t) {
    // Deterministic staircase needs s columns even at t = 0; beyond that the
    // survival probability after 64*s/(-log2 t) extra columns is ~2^(-64 s).
    if (t <= 0.0) return s;
    return s + static_cast<long>(std::ceil(64.0 * s / (-std::log2(t))));
}

void run_stream(int s, double t, std::uint64_t n, std::uint64_t seed, StreamTally& tally) {
    std::mt19937_64 rng(seed);
    // Fully specified uniform in [0,1): top 53 bits of the generator output.
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    const long cap = column_cap(s, t);
    std::vector<int> exits;
    exits.reserve(static_cast<size_t>(s));

    for (std::uint64_t sample = 0; sample < n; ++sample) {
        unsigned mask = (1u << s) - 1u; // lines entering from the left, bit j-1 = row j
        exits.clear();
        long col = 0;
        while (mask != 0u && col < cap) {
            ++col;
            bool v = false;
            unsigned out = 0u;
            for (int j = s; j >= 1; --j) {
                const unsigned hbit = 1u << (j - 1);
                const bool h = (mask & hbit) != 0u;
                if (h == v) {
                    if (h) out |= hbit;
                    continue;
                }
                const bool pass = uniform() < t;
                if (h) {
                    if (pass) { out |= hbit; v = false; } else { v = true; }
                } else {
                    if (pass) { v = true; } else { out |= hbit; v = false; }
                }
            }
            if (v) exits.push_back(static_cast<int>(col));
            mask = out;
        }
        if (mask != 0u) {
            ++tally.flagged;
            continue;
        }
        for (int m : exits) {
            if (tally.counts.size() < static_cast<size_t>(m)) tally.counts.resize(m, 0);
            ++tally.counts[m - 1];
        }
    }
}

int thread_cap() {
    if (const char* env = std::getenv("PDWBC_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace

McResult mc_sample_exits(int s, double t, std::uint64_t n_samples, std::uint64_t seed,
                         int workers) {
    if (s < 1) throw std::invalid_argument("need at least one line");
    if (s > 30) throw resource_error("sampler guard: s <= 30");
    if (!(t >= 0.0 && t < 1.0)) throw std::domain_error("t must satisfy 0 <= t < 1");
    if (workers < 1) throw std::invalid_argument("need at least one worker stream");

    std::vector<StreamTally> tallies(static_cast<size_t>(workers));
    std::vector<std::uint64_t> stream_n(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        stream_n[w] = n_samples / workers + (static_cast<std::uint64_t>(w) < n_samples % workers);
    }

    const int pool = std::min(workers, thread_cap());
    if (pool <= 1) {
        for (int w = 0; w < workers; ++w) run_stream(s, t, stream_n[w], seed + w, tallies[w]);
    } else {
        std::vector<std::thread> threads;
        for (int p = 0; p < pool; ++p) {
            threads.emplace_back([&, p] {
                for (int w = p; w < workers; w += pool) {
                    run_stream(s, t, stream_n[w], seed + w, tallies[w]);
                }
            });
        }
        for (auto& th : threads) th.join();
    }

    McResult result;
    result.s = s;
    result.t = t;
    result.n_samples = n_samples;
    size_t max_col = 0;
    for (const auto& tally : tallies) {
        result.n_flagged += tally.flagged;
        max_col = std::max(max_col, tally.counts.size());
    }
    const std::uint64_t kept = n_samples - result.n_flagged;
    result.columns.resize(max_col);
    for (size_t i = 0; i < max_col; ++i) {
        auto& col = result.columns[i];
        col.m = static_cast<int>(i + 1);
        for (const auto& tally : tallies) {
            if (i < tally.counts.size()) col.count += tally.counts[i];
        }
        if (kept > 0) {
            const double p = static_cast<double>(col.count) / static_cast<double>(kept);
            col.estimate = p;
            col.stderr_ = std::sqrt(p * (1.0 - p) / static_cast<double>(kept));
        }
    }
    return result;
}

void write_histogram_csv(std::ostream& os, const McResult& result) {
    os << "# schema=1\n";
    os << "m,count,estimate,stderr\n";
    for (const auto& col : result.columns) {
        os << col.m << ',' << col.count << ',' << col.estimate << ',' << col.stderr_ << '\n';
    }
}

} // namespace pdwbc
