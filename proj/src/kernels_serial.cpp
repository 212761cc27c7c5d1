// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels and shared combinatorial helpers.

#include <cstdlib>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "nongrs/kernels.hpp"

namespace nongrs {

int worker_threads() {
    static const int cap = [] {
        const char* env = std::getenv("NONGRS_THREADS");
        if (env == nullptr) return 0;
        const int v = std::atoi(env);
        return v > 0 ? v : 0;
    }();
    const int avail = omp_get_max_threads();
    return cap > 0 ? std::min(cap, avail) : avail;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

void unrank_combination(std::uint64_t rank, unsigned n, std::span<unsigned> out) {
    const auto k = static_cast<unsigned>(out.size());
    unsigned x = 0;
    for (unsigned i = 0; i < k; ++i) {
        for (;; ++x) {
            const std::uint64_t count = binomial(n - x - 1, k - i - 1);
            if (rank < count) break;
            rank -= count;
        }
        out[i] = x++;
    }
}

std::vector<Elem> decode_message(const Field& f, std::uint64_t index, std::size_t k) {
    std::vector<Elem> m(k);
    const std::uint64_t q = f.order();
    for (std::size_t i = 0; i < k; ++i) {
        m[i] = index % q;
        index /= q;
    }
    return m;
}

namespace serial {

MinWeight min_weight(const FieldMatrix& g) {
    const Field& f = g.field();
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= f.order();
    MinWeight best{n + 1, 0};
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        const std::vector<Elem> m = decode_message(f, idx, k);
        std::size_t w = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Elem acc = 0;
            for (std::size_t i = 0; i < k; ++i) acc = f.add(acc, f.mul(m[i], g(i, j)));
            if (acc != 0) ++w;
        }
        if (w < best.weight) best = {w, idx};
    }
    return best;
}

std::optional<std::vector<std::size_t>> first_singular_minor(const FieldMatrix& g) {
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    if (k > n) throw std::invalid_argument("more rows than columns");
    std::vector<unsigned> c(k);
    for (unsigned i = 0; i < k; ++i) c[i] = i;
    std::vector<Elem> buf(k * k);
    do {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) buf[i * k + j] = g(i, c[j]);
        if (determinant_inplace(g.field(), buf, k) == 0) return std::vector<std::size_t>(c.begin(), c.end());
    } while (next_combination(c, static_cast<unsigned>(n)));
    return std::nullopt;
}

}  // namespace serial

}  // namespace nongrs
