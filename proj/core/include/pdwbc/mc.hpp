#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

namespace pdwbc {

struct McColumn {
    int m = 0;
    std::uint64_t count = 0;
    double estimate = 0.0;
    double stderr_ = 0.0;
};

struct McResult {
    int s = 0;
    double t = 0.0;
    std::uint64_t n_samples = 0;
    std::uint64_t n_flagged = 0; // hit the column cap; excluded from counts
    std::vector<McColumn> columns;
};

/*
 * Path sampler on the semi-infinite strip, exploiting stochasticity of the
 * weights (b + c = a = 1): each lone line passes straight with probability t
 * and turns with probability 1 - t; doubly occupied vertices pass both lines
 * deterministically. Columns are generated until all s lines have exited
 * through the top, or the safety cap is hit (exits are geometrically
 * distributed, so the cap matters only for termination guarantees).
 *
 * The work is split over `workers` independent streams, stream w seeded as
 * seed + w; results are merged by summation, so the output depends only on
 * (s, t, n_samples, seed, workers), not on how many OS threads actually ran
 * (PDWBC_THREADS caps those).
 */
McResult mc_sample_exits(int s, double t, std::uint64_t n_samples, std::uint64_t seed,
                         int workers = 1);

// CSV columns m,count,estimate,stderr with a "# schema=1" header line.
void write_histogram_csv(std::ostream& os, const McResult& result);

} // namespace pdwbc
