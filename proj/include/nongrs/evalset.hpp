// SPDX-License-Identifier: Apache-2.0

#ifndef NONGRS_EVALSET_HPP
#define NONGRS_EVALSET_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nongrs/field.hpp"

namespace nongrs {

/// Ordered tuple of pairwise distinct field elements (the evaluation points).
/// Order matters for generator columns; symmetric functions ignore it.
class EvalSet {
public:
    /// Throws std::invalid_argument on duplicates, unreduced values, or an
    /// empty / oversized point list.
    EvalSet(Field field, std::vector<Elem> points);

    static EvalSet consecutive(const Field& field, std::size_t n);

    const Field& field() const { return field_; }
    std::span<const Elem> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    Elem operator[](std::size_t i) const { return points_[i]; }

    /// Same points in ascending canonical order.
    EvalSet sorted() const;
    /// Points at positions [0, count).
    EvalSet prefix(std::size_t count) const;

    friend bool operator==(const EvalSet& a, const EvalSet& b) {
        return a.field_ == b.field_ && a.points_ == b.points_;
    }

private:
    Field field_;
    std::vector<Elem> points_;
};

}  // namespace nongrs

#endif
