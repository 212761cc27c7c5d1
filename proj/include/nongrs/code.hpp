// SPDX-License-Identifier: Apache-2.0

#ifndef NONGRS_CODE_HPP
#define NONGRS_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nongrs/certificate.hpp"
#include "nongrs/kernels.hpp"
#include "nongrs/matrix.hpp"

namespace nongrs {

/// Hard caps on the exhaustive checks. Callers may lower them, never raise.
struct Guards {
    static constexpr std::uint64_t kMaxMessages = std::uint64_t{1} << 26;  // q^k for distance
    static constexpr std::uint64_t kMaxMinors = std::uint64_t{1} << 24;    // C(n,k) for minors
    static constexpr std::uint64_t kMaxCosetWork = std::uint64_t{1} << 28; // q^n for covering radius

    std::uint64_t messages = kMaxMessages;
    std::uint64_t minors = kMaxMinors;
    std::uint64_t coset_work = kMaxCosetWork;

    /// Throws std::invalid_argument if any limit exceeds its hard cap.
    void validate() const;

    friend bool operator==(const Guards&, const Guards&) = default;
};

/// Thrown when an exhaustive computation would exceed its guard.
class SizeGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Linear code given by a full-row-rank k x n generator. Parity check and
/// minimum distance are computed on first use and cached; the cache is
/// shared between copies and safe for concurrent readers.
class LinearCode {
public:
    explicit LinearCode(FieldMatrix generator);

    const FieldMatrix& generator() const { return generator_; }
    const Field& field() const { return generator_.field(); }
    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }

    /// (n-k) x n, reduced echelon form.
    const FieldMatrix& parity_check() const;
    std::size_t min_distance(const Guards& guards = {}, Exec exec = Exec::Parallel) const;

    bool contains(std::span<const Elem> word) const;
    std::vector<Elem> encode(std::span<const Elem> message) const;

private:
    struct Cache;
    FieldMatrix generator_;
    std::shared_ptr<Cache> cache_;
};

/// A GRS evaluation point: a field element or the point at infinity.
struct EvalPoint {
    std::optional<Elem> finite;

    static EvalPoint at(Elem a) { return {a}; }
    static EvalPoint infinity() { return {std::nullopt}; }
    bool is_infinity() const { return !finite.has_value(); }

    friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

enum class MdsMethod { Minors, Distance };

std::size_t min_distance(const LinearCode& c, const Guards& guards = {}, Exec exec = Exec::Parallel);

/// Minors: witness is the first singular column k-subset. Distance: witness
/// is a message and its codeword of weight <= n-k.
Certificate is_mds(const LinearCode& c, MdsMethod method = MdsMethod::Minors, const Guards& guards = {},
                   Exec exec = Exec::Parallel);

FieldMatrix parity_check(const LinearCode& c);

LinearCode dual(const LinearCode& c);

/// Generator (G | G w^T). Throws std::invalid_argument for w = 0 or a
/// length mismatch.
LinearCode extend_code(const LinearCode& c, std::span<const Elem> w);

/// Parity check of the extended code in block form [H 0; w -1].
FieldMatrix extended_parity_block(const FieldMatrix& h, std::span<const Elem> w);

/// Dimension of the span of all coordinatewise products g_i * g_j.
std::size_t schur_square_dim(const LinearCode& c);

/// Pass iff C is MDS, 2k <= n and dim C^2 > 2k-1. Never certifies GRS-ness:
/// every other outcome is Inconclusive.
Certificate non_grs_certificate(const LinearCode& c, const Guards& guards = {}, Exec exec = Exec::Parallel);

/// Columns (v_i, v_i a_i, ..., v_i a_i^{k-1})^T; the point at infinity gives
/// (0, ..., 0, v_i)^T.
FieldMatrix grs_generator(const Field& f, std::span<const EvalPoint> points, std::span<const Elem> multipliers,
                          std::size_t k);

/// Coset-leader table over the syndrome space of a code, built by
/// breadth-first search with single-coordinate steps: the BFS depth of a
/// syndrome is the minimum weight of its coset.
class SyndromeTable {
public:
    explicit SyndromeTable(const LinearCode& c, const Guards& guards = {});

    std::size_t covering_radius() const { return radius_; }
    std::size_t redundancy() const { return h_.rows(); }
    std::uint64_t syndrome_count() const { return depth_.size(); }

    std::vector<Elem> syndrome(std::span<const Elem> word) const;
    std::uint64_t index(std::span<const Elem> syndrome) const;
    std::size_t coset_weight(std::uint64_t syndrome_index) const { return depth_[syndrome_index]; }
    /// Minimum-weight vector with the given syndrome.
    std::vector<Elem> leader(std::uint64_t syndrome_index) const;

private:
    FieldMatrix h_;
    std::size_t radius_ = 0;
    std::vector<std::uint8_t> depth_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> step_col_;
    std::vector<Elem> step_coef_;
};

/// max over cosets of F_q^n / C of the minimum coset weight.
std::size_t covering_radius(const LinearCode& c, const Guards& guards = {});

/// Pass iff d(w, C) equals the covering radius. The witness of a fail holds
/// the distance and a coset leader e with w - e in C.
Certificate is_deep_hole(const LinearCode& c, std::span<const Elem> w, const Guards& guards = {});

}  // namespace nongrs

#endif
