// SPDX-License-Identifier: Apache-2.0

#ifndef NONGRS_KERNELS_HPP
#define NONGRS_KERNELS_HPP

// Exhaustive sweeps shared by the code checks. Every kernel has a plain
// serial reference in `serial::` and an OpenMP version in `parallel::`; the
// two must return identical results (the first hit in canonical order, not
// merely some hit).

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nongrs/matrix.hpp"

namespace nongrs {

enum class Exec { Serial, Parallel };

/// Number of worker threads the parallel kernels may use. Honours the
/// NONGRS_THREADS environment variable as an upper cap.
int worker_threads();

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Lexicographic unranking of k-subsets of {0..n-1}.
void unrank_combination(std::uint64_t rank, unsigned n, std::span<unsigned> out);

/// Advance to the lexicographic successor. Returns false after the last one.
inline bool next_combination(std::span<unsigned> c, unsigned n) {
    const auto k = static_cast<unsigned>(c.size());
    if (k == 0) return false;
    unsigned i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (unsigned j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

namespace serial {

/// Rank of the first k-subset of {0..n-1} (lexicographic) that `make()`'s
/// checker flags. `make` is called once.
template <class MakeChecker>
std::optional<std::uint64_t> first_combination(unsigned n, unsigned k, MakeChecker&& make) {
    if (k > n) return std::nullopt;
    auto bad = make();
    std::vector<unsigned> c(k);
    for (unsigned i = 0; i < k; ++i) c[i] = i;
    std::uint64_t rank = 0;
    do {
        if (bad(std::span<const unsigned>(c))) return rank;
        ++rank;
    } while (next_combination(c, n));
    return std::nullopt;
}

}  // namespace serial

namespace parallel {

/// Same contract as serial::first_combination. `make` is called once per
/// thread so checkers can own scratch buffers.
template <class MakeChecker>
std::optional<std::uint64_t> first_combination(unsigned n, unsigned k, MakeChecker&& make) {
    if (k > n) return std::nullopt;
    const std::uint64_t total = binomial(n, k);
    constexpr std::uint64_t chunk = 2048;
    const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
    std::atomic<std::uint64_t> best{total};
#pragma omp parallel num_threads(worker_threads())
    {
        auto bad = make();
        std::vector<unsigned> c(k);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < chunks; ++b) {
            const std::uint64_t begin = static_cast<std::uint64_t>(b) * chunk;
            if (begin >= best.load(std::memory_order_relaxed)) continue;
            const std::uint64_t end = std::min(total, begin + chunk);
            unrank_combination(begin, n, c);
            for (std::uint64_t rank = begin; rank < end; ++rank) {
                if (bad(std::span<const unsigned>(c))) {
                    std::uint64_t cur = best.load(std::memory_order_relaxed);
                    while (rank < cur && !best.compare_exchange_weak(cur, rank, std::memory_order_relaxed)) {
                    }
                    break;
                }
                next_combination(c, n);
            }
        }
    }
    const std::uint64_t r = best.load();
    if (r == total) return std::nullopt;
    return r;
}

}  // namespace parallel

template <class MakeChecker>
std::optional<std::uint64_t> first_combination(unsigned n, unsigned k, MakeChecker&& make, Exec exec) {
    if (exec == Exec::Serial) return serial::first_combination(n, k, std::forward<MakeChecker>(make));
    return parallel::first_combination(n, k, std::forward<MakeChecker>(make));
}

/// Minimum nonzero codeword weight of the row space of a k x n generator,
/// found by enumerating all q^k - 1 nonzero messages. `message` is the
/// smallest message index (base-q digits, row 0 least significant) that
/// attains the minimum.
struct MinWeight {
    std::size_t weight = 0;
    std::uint64_t message = 0;
};

/// Message index -> coefficient vector (length k).
std::vector<Elem> decode_message(const Field& f, std::uint64_t index, std::size_t k);

namespace serial {
MinWeight min_weight(const FieldMatrix& g);
/// First column k-subset (lexicographic) whose k x k minor vanishes.
std::optional<std::vector<std::size_t>> first_singular_minor(const FieldMatrix& g);
}  // namespace serial

namespace parallel {
MinWeight min_weight(const FieldMatrix& g);
std::optional<std::vector<std::size_t>> first_singular_minor(const FieldMatrix& g);
}  // namespace parallel

MinWeight min_weight(const FieldMatrix& g, Exec exec);
std::optional<std::vector<std::size_t>> first_singular_minor(const FieldMatrix& g, Exec exec);

}  // namespace nongrs

#endif
