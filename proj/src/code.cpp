// SPDX-License-Identifier: Apache-2.0

#include "nongrs/code.hpp"

#include <algorithm>
#include <mutex>
#include <string>

namespace nongrs {

namespace {

// q^e, or nullopt past `limit`.
std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > limit / q) return std::nullopt;
        r *= q;
    }
    if (r > limit) return std::nullopt;
    return r;
}

}  // namespace

void Guards::validate() const {
    if (messages > kMaxMessages) throw std::invalid_argument("message guard above hard cap 2^26");
    if (minors > kMaxMinors) throw std::invalid_argument("minor guard above hard cap 2^24");
    if (coset_work > kMaxCosetWork) throw std::invalid_argument("coset guard above hard cap 2^28");
}

struct LinearCode::Cache {
    std::once_flag parity_once;
    std::optional<FieldMatrix> parity;
    std::mutex distance_mutex;
    std::optional<std::size_t> distance;
};

LinearCode::LinearCode(FieldMatrix generator) : generator_(std::move(generator)), cache_(std::make_shared<Cache>()) {
    if (generator_.rows() == 0) throw std::invalid_argument("a code needs dimension >= 1");
    if (generator_.rows() > generator_.cols()) throw std::invalid_argument("generator has more rows than columns");
    if (rank(generator_) != generator_.rows()) throw std::invalid_argument("generator matrix is not of full row rank");
}

const FieldMatrix& LinearCode::parity_check() const {
    std::call_once(cache_->parity_once, [this] { cache_->parity = kernel_basis(generator_); });
    return *cache_->parity;
}

std::size_t LinearCode::min_distance(const Guards& guards, Exec exec) const {
    {
        std::lock_guard lock(cache_->distance_mutex);
        if (cache_->distance) return *cache_->distance;
    }
    guards.validate();
    if (!bounded_power(field().order(), dimension(), guards.messages))
        throw SizeGuardError("q^k exceeds the message-enumeration guard");
    const std::size_t d = min_weight(generator_, exec).weight;
    std::lock_guard lock(cache_->distance_mutex);
    cache_->distance = d;
    return d;
}

bool LinearCode::contains(std::span<const Elem> word) const {
    const auto s = parity_check().apply(word);
    return std::all_of(s.begin(), s.end(), [](Elem v) { return v == 0; });
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const {
    if (message.size() != dimension()) throw std::invalid_argument("message length must equal the dimension");
    return generator_.transpose().apply(message);
}

std::size_t min_distance(const LinearCode& c, const Guards& guards, Exec exec) {
    return c.min_distance(guards, exec);
}

Certificate is_mds(const LinearCode& c, MdsMethod method, const Guards& guards, Exec exec) {
    guards.validate();
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    Certificate cert;
    cert.kind = CertKind::Mds;
    cert.params = {{"n", n}, {"k", k}, {"field", c.field().spec().describe()}};
    if (method == MdsMethod::Minors) {
        cert.params["method"] = "minors";
        if (binomial(n, k) > guards.minors) throw SizeGuardError("C(n,k) exceeds the minor-sweep guard");
        const auto cols = first_singular_minor(c.generator(), exec);
        if (cols) {
            cert.verdict = Verdict::Fail;
            cert.witness = {{"singular_columns", *cols}};
        } else {
            cert.verdict = Verdict::Pass;
        }
        return cert;
    }
    cert.params["method"] = "distance";
    if (!bounded_power(c.field().order(), k, guards.messages))
        throw SizeGuardError("q^k exceeds the message-enumeration guard");
    const MinWeight mw = min_weight(c.generator(), exec);
    cert.params["d"] = mw.weight;
    if (mw.weight == n - k + 1) {
        cert.verdict = Verdict::Pass;
    } else {
        const auto msg = decode_message(c.field(), mw.message, k);
        cert.verdict = Verdict::Fail;
        cert.witness = {{"message", msg}, {"codeword", c.encode(msg)}, {"weight", mw.weight}};
    }
    return cert;
}

FieldMatrix parity_check(const LinearCode& c) { return c.parity_check(); }

LinearCode dual(const LinearCode& c) {
    if (c.dimension() == c.length()) throw std::invalid_argument("the dual of the full space is the zero code");
    return LinearCode(c.parity_check());
}

LinearCode extend_code(const LinearCode& c, std::span<const Elem> w) {
    if (w.size() != c.length()) throw std::invalid_argument("extension vector length must equal the code length");
    if (std::all_of(w.begin(), w.end(), [](Elem v) { return v == 0; }))
        throw std::invalid_argument("extension vector must be nonzero");
    return LinearCode(append_column(c.generator(), c.generator().apply(w)));
}

FieldMatrix extended_parity_block(const FieldMatrix& h, std::span<const Elem> w) {
    if (w.size() != h.cols()) throw std::invalid_argument("extension vector length must equal the code length");
    const Field& f = h.field();
    FieldMatrix out(f, h.rows() + 1, h.cols() + 1);
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
    for (std::size_t j = 0; j < h.cols(); ++j) out(h.rows(), j) = w[j];
    out(h.rows(), h.cols()) = f.neg(1);
    return out;
}

std::size_t schur_square_dim(const LinearCode& c) {
    const FieldMatrix& g = c.generator();
    const Field& f = g.field();
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    FieldMatrix prod(f, k * (k + 1) / 2, n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j, ++row)
            for (std::size_t l = 0; l < n; ++l) prod(row, l) = f.mul(g(i, l), g(j, l));
    return rank(prod);
}

Certificate non_grs_certificate(const LinearCode& c, const Guards& guards, Exec exec) {
    const std::size_t n = c.length();
    const std::size_t k = c.dimension();
    Certificate cert;
    cert.kind = CertKind::NonGrs;
    cert.verdict = Verdict::Inconclusive;
    cert.params = {{"n", n}, {"k", k}, {"grs_square_dim", 2 * k - 1}};
    if (2 * k > n) {
        cert.params["reason"] = "2k > n: Schur-square test not conclusive";
        return cert;
    }
    if (!is_mds(c, MdsMethod::Minors, guards, exec).passed()) {
        cert.params["reason"] = "code is not MDS";
        return cert;
    }
    const std::size_t dim = schur_square_dim(c);
    cert.params["schur_square_dim"] = dim;
    if (dim > 2 * k - 1) {
        cert.verdict = Verdict::Pass;
    } else {
        cert.params["reason"] = "dim C^2 = 2k-1, same as a GRS code";
    }
    return cert;
}

FieldMatrix grs_generator(const Field& f, std::span<const EvalPoint> points, std::span<const Elem> multipliers,
                          std::size_t k) {
    const std::size_t n = points.size();
    if (multipliers.size() != n) throw std::invalid_argument("one column multiplier per point required");
    if (n > f.order() + 1) throw std::invalid_argument("a GRS code has length at most q+1");
    if (k < 1 || k > n) throw std::invalid_argument("GRS dimension must satisfy 1 <= k <= n");
    for (std::size_t i = 0; i < n; ++i) {
        if (multipliers[i] == 0 || !f.contains(multipliers[i]))
            throw std::invalid_argument("column multipliers must be nonzero field elements");
        if (points[i].finite && !f.contains(*points[i].finite))
            throw std::invalid_argument("evaluation point is not a field element");
        for (std::size_t j = 0; j < i; ++j)
            if (points[i] == points[j]) throw std::invalid_argument("GRS evaluation points must be distinct");
    }
    FieldMatrix g(f, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (points[j].is_infinity()) {
            g(k - 1, j) = multipliers[j];
            continue;
        }
        Elem x = multipliers[j];
        for (std::size_t i = 0; i < k; ++i) {
            g(i, j) = x;
            x = f.mul(x, *points[j].finite);
        }
    }
    return g;
}

}  // namespace nongrs
