// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>

#include <omp.h>

#include "nongrs/kernels.hpp"

namespace nongrs {

namespace parallel {

MinWeight min_weight(const FieldMatrix& g) {
    const Field& f = g.field();
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    const std::uint64_t q = f.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= q;

    constexpr std::uint64_t chunk = 1 << 14;
    const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
    MinWeight best{n + 1, 0};

#pragma omp parallel num_threads(worker_threads())
    {
        MinWeight local{n + 1, 0};
        std::vector<Elem> word(n);
        std::vector<Elem> digits(k);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < chunks; ++b) {
            const std::uint64_t begin = static_cast<std::uint64_t>(b) * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            digits = decode_message(f, begin, k);
            for (std::size_t j = 0; j < n; ++j) {
                Elem acc = 0;
                for (std::size_t i = 0; i < k; ++i) acc = f.add(acc, f.mul(digits[i], g(i, j)));
                word[j] = acc;
            }
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                if (idx != 0) {
                    std::size_t w = 0;
                    for (Elem v : word) w += (v != 0);
                    if (w < local.weight || (w == local.weight && idx < local.message)) local = {w, idx};
                }
                // increment the base-q counter and patch the codeword
                for (std::size_t i = 0; i < k; ++i) {
                    const Elem old = digits[i];
                    const Elem next = (old + 1 == q) ? 0 : old + 1;
                    digits[i] = next;
                    const Elem delta = f.sub(next, old);
                    for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(delta, g(i, j)));
                    if (next != 0) break;
                }
            }
        }
#pragma omp critical
        {
            if (local.weight < best.weight || (local.weight == best.weight && local.message < best.message))
                best = local;
        }
    }
    return best;
}

std::optional<std::vector<std::size_t>> first_singular_minor(const FieldMatrix& g) {
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    if (k > n) throw std::invalid_argument("more rows than columns");
    auto make = [&] {
        return [&g, k, buf = std::vector<Elem>(k * k)](std::span<const unsigned> c) mutable {
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) buf[i * k + j] = g(i, c[j]);
            return determinant_inplace(g.field(), buf, k) == 0;
        };
    };
    const auto rank = first_combination(static_cast<unsigned>(n), static_cast<unsigned>(k), make);
    if (!rank) return std::nullopt;
    std::vector<unsigned> c(k);
    unrank_combination(*rank, static_cast<unsigned>(n), c);
    return std::vector<std::size_t>(c.begin(), c.end());
}

}  // namespace parallel

MinWeight min_weight(const FieldMatrix& g, Exec exec) {
    return exec == Exec::Serial ? serial::min_weight(g) : parallel::min_weight(g);
}

std::optional<std::vector<std::size_t>> first_singular_minor(const FieldMatrix& g, Exec exec) {
    return exec == Exec::Serial ? serial::first_singular_minor(g) : parallel::first_singular_minor(g);
}

}  // namespace nongrs
