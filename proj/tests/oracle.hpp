// SPDX-License-Identifier: Apache-2.0

#ifndef NONGRS_TESTS_ORACLE_HPP
#define NONGRS_TESTS_ORACLE_HPP

// Slow, independent reference arithmetic for the tests. Nothing here calls
// into the library: prime fields use plain %, binary fields use
// shift-and-add multiplication, inverses are found by search, determinants
// by cofactor expansion.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

struct F {
    bool binary = false;
    u64 p = 0;     // prime
    unsigned m = 0;
    u64 poly = 0;  // binary modulus

    static F prime(u64 p) { return {false, p, 0, 0}; }
    static F gf2(unsigned m, u64 poly) { return {true, 0, m, poly}; }

    u64 q() const { return binary ? (u64{1} << m) : p; }
    u64 add(u64 a, u64 b) const { return binary ? (a ^ b) : (a + b) % p; }
    u64 neg(u64 a) const { return binary ? a : (p - a) % p; }
    u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }
    u64 mul(u64 a, u64 b) const {
        if (!binary) return (a * b) % p;
        u64 r = 0;
        for (unsigned i = 0; i < m; ++i)
            if ((b >> i) & 1) r ^= a << i;
        for (unsigned i = 2 * m; i-- > m;)
            if ((r >> i) & 1) r ^= poly << (i - m);
        return r;
    }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        for (u64 i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
    u64 inv(u64 a) const {
        for (u64 x = 1; x < q(); ++x)
            if (mul(a, x) == 1) return x;
        return 0;
    }
};

using Mat = std::vector<std::vector<u64>>;

inline u64 det(const F& f, const Mat& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    u64 acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        Mat minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<u64> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            minor.push_back(row);
        }
        const u64 term = f.mul(a[0][j], det(f, minor));
        acc = (j % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

/// Visit every k-subset of {0..n-1}.
inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> c;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (c.size() == k) {
            fn(c);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            c.push_back(i);
            rec(i + 1);
            c.pop_back();
        }
    };
    rec(0);
}

/// Sum of all t-element products.
inline u64 sigma(const F& f, std::size_t t, const std::vector<u64>& x) {
    u64 acc = 0;
    subsets(x.size(), t, [&](const std::vector<std::size_t>& c) {
        u64 prod = 1;
        for (auto i : c) prod = f.mul(prod, x[i]);
        acc = f.add(acc, prod);
    });
    return acc;
}

/// Sum of all degree-t monomials (multisets of size t).
inline u64 complete(const F& f, long t, const std::vector<u64>& x) {
    if (t < 0) return 0;
    u64 acc = 0;
    std::function<void(std::size_t, long, u64)> rec = [&](std::size_t i, long left, u64 prod) {
        if (left == 0) {
            acc = f.add(acc, prod);
            return;
        }
        if (i == x.size()) return;
        rec(i, left - 1, f.mul(prod, x[i]));
        rec(i + 1, left, prod);
    };
    rec(0, t, 1);
    return acc;
}

/// Rank as the largest nonvanishing minor size (small matrices only).
inline std::size_t rank(const F& f, const Mat& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t r = std::min(rows, cols); r > 0; --r) {
        bool found = false;
        subsets(rows, r, [&](const std::vector<std::size_t>& ri) {
            if (found) return;
            subsets(cols, r, [&](const std::vector<std::size_t>& ci) {
                if (found) return;
                Mat m(r, std::vector<u64>(r));
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) m[i][j] = a[ri[i]][ci[j]];
                if (det(f, m) != 0) found = true;
            });
        });
        if (found) return r;
    }
    return 0;
}

/// Every linear combination of the rows.
inline std::vector<std::vector<u64>> span(const F& f, const Mat& g) {
    const std::size_t k = g.size();
    const std::size_t n = k ? g[0].size() : 0;
    std::vector<std::vector<u64>> out;
    std::vector<u64> msg(k, 0);
    while (true) {
        std::vector<u64> w(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) w[j] = f.add(w[j], f.mul(msg[i], g[i][j]));
        out.push_back(w);
        std::size_t i = 0;
        while (i < k && ++msg[i] == f.q()) msg[i++] = 0;
        if (i == k) break;
    }
    return out;
}

inline std::size_t weight(const std::vector<u64>& w) {
    std::size_t c = 0;
    for (auto v : w) c += v != 0;
    return c;
}

inline std::size_t min_distance(const F& f, const Mat& g) {
    std::size_t best = SIZE_MAX;
    for (const auto& w : span(f, g))
        if (weight(w) > 0) best = std::min(best, weight(w));
    return best;
}

inline std::size_t distance_to(const std::vector<std::vector<u64>>& words, const std::vector<u64>& x, const F& f) {
    std::size_t best = SIZE_MAX;
    for (const auto& w : words) {
        std::size_t d = 0;
        for (std::size_t j = 0; j < x.size(); ++j) d += f.sub(x[j], w[j]) != 0;
        best = std::min(best, d);
    }
    return best;
}

/// max over all of F_q^n of the distance to the row space of g.
inline std::size_t covering_radius(const F& f, const Mat& g) {
    const auto words = span(f, g);
    const std::size_t n = g[0].size();
    std::vector<u64> x(n, 0);
    std::size_t best = 0;
    while (true) {
        best = std::max(best, distance_to(words, x, f));
        std::size_t i = 0;
        while (i < n && ++x[i] == f.q()) x[i++] = 0;
        if (i == n) break;
    }
    return best;
}


/// Nullspace dimension and one basis vector of {x : A x^T = 0} by plain
/// elimination. Returns the whole basis.
inline Mat nullspace(const F& f, Mat a, std::size_t cols) {
    std::vector<std::size_t> pivcol;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        const u64 iv = f.inv(a[row][c]);
        for (auto& v : a[row]) v = f.mul(v, iv);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][c] == 0) continue;
            const u64 m = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[row][j]));
        }
        pivcol.push_back(c);
        ++row;
    }
    Mat basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (std::find(pivcol.begin(), pivcol.end(), fc) != pivcol.end()) continue;
        std::vector<u64> x(cols, 0);
        x[fc] = 1;
        for (std::size_t i = 0; i < pivcol.size(); ++i) x[pivcol[i]] = f.neg(a[i][fc]);
        basis.push_back(x);
    }
    return basis;
}

/// True if the code with generator g (k x n) and parity-check h equals
/// GRS_k(x, v) for some points x in F_q u {inf} and nonzero multipliers v.
/// Mobius maps act 3-transitively on the points and preserve the family, so
/// the first three points are fixed to 0, 1, inf and the rest enumerated.
/// For each point tuple the multipliers solve the linear system
/// h * diag(v) * V(x)^T = 0; a one-dimensional solution space is tested for
/// a nowhere-zero vector.
inline bool is_grs(const F& f, const Mat& g, const Mat& h) {
    const std::size_t k = g.size(), n = g[0].size();
    const u64 q = f.q();
    const u64 inf = q;
    std::vector<u64> x(n);
    x[0] = 0;
    x[1] = 1;
    x[2] = inf;
    bool found = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (found) return;
        if (i == n) {
            Mat v(k, std::vector<u64>(n));
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t e = 0; e < k; ++e)
                    v[e][j] = x[j] == inf ? (e + 1 == k ? 1 : 0) : f.pow(x[j], e);
            Mat sys;
            for (const auto& hr : h)
                for (const auto& vr : v) {
                    std::vector<u64> eq(n);
                    for (std::size_t j = 0; j < n; ++j) eq[j] = f.mul(hr[j], vr[j]);
                    sys.push_back(eq);
                }
            const Mat ns = nullspace(f, sys, n);
            if (ns.size() == 1 && std::none_of(ns[0].begin(), ns[0].end(), [](u64 t) { return t == 0; })) found = true;
            return;
        }
        for (u64 t = 2; t < q; ++t) {
            if (std::find(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i), t) != x.begin() + static_cast<std::ptrdiff_t>(i)) continue;
            x[i] = t;
            rec(i + 1);
        }
    };
    if (n < 3) return true;
    rec(3);
    return found;
}

}  // namespace oracle

#endif
