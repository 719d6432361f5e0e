#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#ifdef FFDISC_OPENMP
#include <omp.h>
#endif

namespace ffdisc {

// Deterministic reduction scheme shared by the serial reference and the
// OpenMP kernels: the index range is cut into fixed-size chunks (independent
// of the worker count), each chunk is accumulated left-to-right, and the
// chunk results are combined by a pairwise tree. Serial and parallel runs
// produce bit-identical sums for any thread count.
inline constexpr std::uint64_t kChunk = 1u << 12;

inline std::complex<double> pairwise_tree_sum(std::vector<std::complex<double>>& v) {
    if (v.empty()) return {0.0, 0.0};
    std::size_t n = v.size();
    while (n > 1) {
        const std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i) v[i] = v[2 * i] + v[2 * i + 1];
        if (n % 2) {
            v[half] = v[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    return v[0];
}

// sum over [0, total) of fn(i), chunked; parallel toggles OpenMP
inline std::complex<double> chunked_sum(
    std::uint64_t total, bool parallel,
    const std::function<std::complex<double>(std::uint64_t, std::uint64_t)>& chunk_fn) {
    const std::uint64_t nchunks = (total + kChunk - 1) / kChunk;
    std::vector<std::complex<double>> partial(static_cast<std::size_t>(nchunks));
#ifdef FFDISC_OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
            const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
            partial[static_cast<std::size_t>(c)] = chunk_fn(lo, std::min(total, lo + kChunk));
        }
        return pairwise_tree_sum(partial);
    }
#else
    (void)parallel;
#endif
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        const std::uint64_t lo = c * kChunk;
        partial[static_cast<std::size_t>(c)] = chunk_fn(lo, std::min(total, lo + kChunk));
    }
    return pairwise_tree_sum(partial);
}

// max over chunks of a nonnegative statistic, with the argmax index;
// deterministic: ties resolved toward the smallest index
struct MaxResult {
    double value = 0.0;
    std::uint64_t arg = 0;
};
inline MaxResult chunked_max(
    std::uint64_t total, bool parallel,
    const std::function<MaxResult(std::uint64_t, std::uint64_t)>& chunk_fn) {
    const std::uint64_t nchunks = (total + kChunk - 1) / kChunk;
    std::vector<MaxResult> partial(static_cast<std::size_t>(nchunks));
#ifdef FFDISC_OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
            const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
            partial[static_cast<std::size_t>(c)] = chunk_fn(lo, std::min(total, lo + kChunk));
        }
    } else
#endif
    {
        (void)parallel;
        for (std::uint64_t c = 0; c < nchunks; ++c) {
            const std::uint64_t lo = c * kChunk;
            partial[static_cast<std::size_t>(c)] = chunk_fn(lo, std::min(total, lo + kChunk));
        }
    }
    MaxResult best;
    bool first = true;
    for (const MaxResult& m : partial) {
        if (first || m.value > best.value) {
            best = m;
            first = false;
        }
    }
    return best;
}

}  // namespace ffdisc
