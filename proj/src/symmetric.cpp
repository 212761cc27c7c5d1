// SPDX-License-Identifier: Apache-2.0

#include "nongrs/symmetric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nongrs {

EvalSet::EvalSet(Field field, std::vector<Elem> points) : field_(std::move(field)), points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("evaluation set must be non-empty");
    if (points_.size() > field_.order()) throw std::invalid_argument("more evaluation points than field elements");
    for (Elem a : points_) {
        if (!field_.contains(a))
            throw std::invalid_argument("point " + std::to_string(a) + " is not an element of " +
                                        field_.spec().describe());
    }
    std::vector<Elem> s = points_;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("evaluation points must be pairwise distinct");
}

EvalSet EvalSet::consecutive(const Field& field, std::size_t n) {
    std::vector<Elem> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = field.from_int(static_cast<std::int64_t>(i));
    return EvalSet(field, std::move(pts));
}

EvalSet EvalSet::sorted() const {
    std::vector<Elem> s = points_;
    std::sort(s.begin(), s.end());
    return EvalSet(field_, std::move(s));
}

EvalSet EvalSet::prefix(std::size_t count) const {
    if (count == 0 || count > points_.size()) throw std::out_of_range("prefix length out of range");
    return EvalSet(field_, std::vector<Elem>(points_.begin(), points_.begin() + static_cast<long>(count)));
}

std::vector<Elem> elementary_upto(const Field& f, std::span<const Elem> pts, std::size_t tmax) {
    std::vector<Elem> e(tmax + 1, 0);
    e[0] = 1;
    std::size_t deg = 0;
    for (Elem a : pts) {
        deg = std::min(deg + 1, tmax);
        for (std::size_t t = deg; t >= 1; --t) e[t] = f.add(e[t], f.mul(a, e[t - 1]));
    }
    return e;
}

Elem elementary(const Field& f, std::size_t t, std::span<const Elem> pts) {
    if (t > pts.size()) return 0;
    return elementary_upto(f, pts, t)[t];
}

std::vector<Elem> complete_upto(const Field& f, std::span<const Elem> pts, std::size_t tmax) {
    const std::size_t n = pts.size();
    const std::vector<Elem> sigma = elementary_upto(f, pts, std::min(n, tmax));
    std::vector<Elem> s(tmax + 1, 0);
    s[0] = 1;
    for (std::size_t N = 1; N <= tmax; ++N) {
        Elem acc = 0;
        for (std::size_t t = 1; t <= std::min(N, n); ++t) {
            const Elem term = f.mul(sigma[t], s[N - t]);
            acc = (t % 2 == 1) ? f.add(acc, term) : f.sub(acc, term);
        }
        s[N] = acc;
    }
    return s;
}

Elem complete(const Field& f, long t, std::span<const Elem> pts) {
    if (t < 0) return 0;
    return complete_upto(f, pts, static_cast<std::size_t>(t))[static_cast<std::size_t>(t)];
}

FieldElement elementary(std::size_t t, const EvalSet& s) {
    return s.field().element(elementary(s.field(), t, s.points()));
}

FieldElement complete(long t, const EvalSet& s) { return s.field().element(complete(s.field(), t, s.points())); }

Elem lambda_weight(unsigned r, std::size_t i, const EvalSet& s, std::size_t k) {
    const std::size_t n = s.size();
    if (r < 1) throw std::invalid_argument("lambda weight needs r >= 1");
    if (i >= n) throw std::out_of_range("lambda weight index out of range");
    if (n <= k) throw std::invalid_argument("lambda weight exponent (n-k)+(r-1)-r is negative for n <= k");
    const Field& f = s.field();
    const std::vector<Elem> sigma = elementary_upto(f, s.points(), r);
    const Elem a = s[i];
    const std::size_t top = (n - k) + (r - 1);
    Elem acc = 0;
    for (std::size_t j = 0; j <= r; ++j) {
        const Elem term = f.mul(sigma[j], f.pow(a, top - j));
        acc = (j % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

std::vector<Elem> dual_weights(const Field& f, std::span<const Elem> pts) {
    std::vector<Elem> u(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Elem prod = 1;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j != i) prod = f.mul(prod, f.sub(pts[i], pts[j]));
        }
        u[i] = f.inv(prod);
    }
    return u;
}

std::vector<Elem> dual_weights(const EvalSet& s) {
    if (s.size() < 2) throw std::invalid_argument("dual weights need at least two points");
    return dual_weights(s.field(), s.points());
}

}  // namespace nongrs
