// SPDX-License-Identifier: Apache-2.0

#include "nongrs/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "nongrs/symmetric.hpp"

namespace nongrs {

namespace {

// sigma_0..sigma_tmax of the points selected by `c`, without allocating.
void subset_sigma(const Field& f, std::span<const Elem> pts, std::span<const unsigned> c, std::span<Elem> e) {
    const std::size_t tmax = e.size() - 1;
    std::fill(e.begin(), e.end(), Elem{0});
    e[0] = 1;
    std::size_t deg = 0;
    for (unsigned idx : c) {
        const Elem a = pts[idx];
        deg = std::min(deg + 1, tmax);
        for (std::size_t t = deg; t >= 1; --t) e[t] = f.add(e[t], f.mul(a, e[t - 1]));
    }
}

struct ConditionShape {
    unsigned subset_size = 0;
    unsigned sigma_max = 0;
    bool vacuous = false;
};

ConditionShape shape_of(Condition which, const ConstructionParams& p) {
    const unsigned k = p.k;
    const unsigned r = p.r;
    switch (which) {
        case Condition::Star:
            return {k, r, false};
        case Condition::Star2:
            return {k - 1, r - 1, r == 1};
        case Condition::Star3:
            if (k < 2) throw std::invalid_argument("STAR3 needs k >= 2");
            return {k - 2, r >= 2 ? r - 2 : 0, r <= 2};
        case Condition::Hash:
            if (r < 2) throw std::invalid_argument("HASH applies to r >= 2; use R1DELTA for r = 1");
            if (!p.delta) throw std::invalid_argument("HASH needs delta");
            return {k - 1, r, false};
        case Condition::R1Delta:
            if (r != 1) throw std::invalid_argument("R1DELTA applies to r = 1 only");
            if (!p.delta) throw std::invalid_argument("R1DELTA needs delta");
            return {k - 1, 2, false};
    }
    throw std::logic_error("unknown condition");
}

// Value whose vanishing violates the condition, given sigma_0..sigma_max of
// the subset.
Elem condition_value(const Field& f, Condition which, unsigned r, Elem delta, std::span<const Elem> s) {
    switch (which) {
        case Condition::Star:
            return s[r];
        case Condition::Star2:
            return s[r - 1];
        case Condition::Star3:
            return s[r - 2];
        case Condition::Hash: {
            const Elem lhs = f.mul(f.sub(delta, s[1]), s[r - 1]);
            return f.add(lhs, s[r]);
        }
        case Condition::R1Delta:
            return f.add(f.sub(delta, f.mul(s[1], s[1])), s[2]);
    }
    return 1;
}

void check_vector(const FieldMatrix& g, std::span<const Elem> w, std::span<const Elem> target) {
    if (g.apply(w) != std::vector<Elem>(target.begin(), target.end()))
        throw std::logic_error("extension vector failed substitution check");
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::CRK:
            return "CRK";
        case Family::C1:
            return "C1";
        case Family::C2:
            return "C2";
    }
    return "?";
}

std::string to_string(Condition c) {
    switch (c) {
        case Condition::Star:
            return "STAR";
        case Condition::Star2:
            return "STAR2";
        case Condition::Star3:
            return "STAR3";
        case Condition::Hash:
            return "HASH";
        case Condition::R1Delta:
            return "R1DELTA";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    std::string u = s;
    std::transform(u.begin(), u.end(), u.begin(), ::toupper);
    if (u == "CRK") return Family::CRK;
    if (u == "C1") return Family::C1;
    if (u == "C2") return Family::C2;
    throw std::invalid_argument("unknown family '" + s + "' (expected crk, c1, c2)");
}

Condition condition_from_string(const std::string& s) {
    std::string u = s;
    std::transform(u.begin(), u.end(), u.begin(), ::toupper);
    for (Condition c : {Condition::Star, Condition::Star2, Condition::Star3, Condition::Hash, Condition::R1Delta})
        if (to_string(c) == u) return c;
    throw std::invalid_argument("unknown condition '" + s + "'");
}

std::string to_string(SearchStrategy s) {
    switch (s) {
        case SearchStrategy::Consecutive:
            return "consecutive";
        case SearchStrategy::Exhaustive:
            return "exhaustive";
        case SearchStrategy::Randomized:
            return "randomized";
    }
    return "?";
}

SearchStrategy strategy_from_string(const std::string& s) {
    for (SearchStrategy v : {SearchStrategy::Consecutive, SearchStrategy::Exhaustive, SearchStrategy::Randomized})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown search strategy '" + s + "'");
}

void ConstructionParams::validate() const {
    const std::size_t len = n();
    if (k < 2 || r < 1 || r > k - 1) throw std::invalid_argument("need 1 <= r <= k-1");
    if (len <= k) throw std::invalid_argument("need k < n");
    if (len > field().order()) throw std::invalid_argument("need n <= q");
    if ((family == Family::C2) != delta.has_value())
        throw std::invalid_argument(family == Family::C2 ? "family C2 needs delta" : "delta is only used by family C2");
    if (delta && !field().contains(*delta)) throw std::invalid_argument("delta is not a field element");
}

bool ConstructionParams::in_theorem_range() const { return 6 <= 2 * k && 2 * k <= n(); }

ConstructionParams ConstructionParams::with_family(Family f, std::optional<Elem> d) const {
    ConstructionParams out = *this;
    out.family = f;
    out.delta = f == Family::C2 ? (d ? d : delta) : std::nullopt;
    return out;
}

std::vector<unsigned> generator_exponents(unsigned k, unsigned r) {
    std::vector<unsigned> e;
    for (unsigned i = 0; i <= k; ++i)
        if (i != k - r) e.push_back(i);
    return e;
}

FieldMatrix build_generator(const ConstructionParams& p) {
    p.validate();
    const Field& f = p.field();
    const auto exps = generator_exponents(p.k, p.r);
    FieldMatrix g = power_rows(f, p.alphas.points(), exps);
    if (p.family == Family::CRK) return g;
    std::vector<Elem> col(p.k, 0);
    col[p.k - 1] = 1;
    g = append_column(g, col);
    if (p.family == Family::C1) return g;
    col[p.k - 2] = 1;
    col[p.k - 1] = *p.delta;
    return append_column(g, col);
}

LinearCode build_code(const ConstructionParams& p) { return LinearCode(build_generator(p)); }

FieldMatrix build_parity(const ConstructionParams& p) {
    p.validate();
    const Field& f = p.field();
    const std::size_t n = p.n();
    const std::size_t k = p.k;
    const std::size_t extra = p.family == Family::CRK ? 0 : (p.family == Family::C1 ? 1 : 2);
    const std::vector<Elem> u = dual_weights(p.alphas);
    const auto pts = p.alphas.points();

    FieldMatrix h(f, n - k + extra, n + extra);
    auto u_pow_row = [&](std::size_t row, unsigned e) {
        for (std::size_t i = 0; i < n; ++i) h(row, i) = f.mul(u[i], f.pow(pts[i], e));
    };
    std::size_t row = 0;
    for (unsigned e = 0; e + 2 <= n - k; ++e) u_pow_row(row++, e);
    for (std::size_t i = 0; i < n; ++i) h(row, i) = f.mul(u[i], lambda_weight(p.r, i, p.alphas, k));
    ++row;
    if (p.family == Family::CRK) return h;

    u_pow_row(row, static_cast<unsigned>(n - k - 1));
    h(row, n) = f.neg(1);
    ++row;
    if (p.family == Family::C1) return h;

    if (p.r >= 2) {
        u_pow_row(row, static_cast<unsigned>(n - k));
        h(row, n) = f.sub(*p.delta, elementary(f, 1, pts));
    } else {
        u_pow_row(row, static_cast<unsigned>(n - k + 1));
        h(row, n) = f.sub(*p.delta, complete(f, 2, pts));
    }
    h(row, n + 1) = f.neg(1);
    return h;
}

Certificate check_condition(Condition which, const ConstructionParams& p, Exec exec) {
    if (p.k < 2 || p.r < 1 || p.r > p.k - 1) throw std::invalid_argument("need 1 <= r <= k-1");
    const ConditionShape shape = shape_of(which, p);
    const std::size_t n = p.n();
    if (shape.subset_size > n) throw std::invalid_argument("condition subset size exceeds the number of points");

    Certificate cert;
    cert.kind = CertKind::Condition;
    cert.params = {{"condition", to_string(which)},
                   {"k", p.k},
                   {"r", p.r},
                   {"n", n},
                   {"subset_size", shape.subset_size},
                   {"theorem_range", p.in_theorem_range()}};
    if (p.delta) cert.params["delta"] = *p.delta;
    if (shape.vacuous) {
        cert.verdict = Verdict::Pass;
        cert.params["vacuous"] = true;
        return cert;
    }

    const Field& f = p.field();
    const EvalSet sorted = p.alphas.sorted();
    const std::vector<Elem> pts(sorted.points().begin(), sorted.points().end());
    const Elem delta = p.delta.value_or(0);
    const unsigned r = p.r;
    const unsigned sigma_max = shape.sigma_max;

    auto make = [&] {
        return [&f, &pts, which, r, delta, s = std::vector<Elem>(sigma_max + 1)](
                   std::span<const unsigned> c) mutable {
            subset_sigma(f, pts, c, s);
            return condition_value(f, which, r, delta, s) == 0;
        };
    };
    const auto bad = first_combination(static_cast<unsigned>(n), shape.subset_size, make, exec);
    cert.params["subsets"] = binomial(n, shape.subset_size);
    if (!bad) {
        cert.verdict = Verdict::Pass;
        return cert;
    }
    std::vector<unsigned> c(shape.subset_size);
    unrank_combination(*bad, static_cast<unsigned>(n), c);
    std::vector<Elem> subset;
    for (unsigned i : c) subset.push_back(pts[i]);
    cert.verdict = Verdict::Fail;
    cert.witness = {{"subset", subset}, {"rank", *bad}};
    return cert;
}

std::vector<Condition> mds_conditions(Family family, unsigned r) {
    switch (family) {
        case Family::CRK:
            return {Condition::Star};
        case Family::C1:
            return {Condition::Star, Condition::Star2};
        case Family::C2:
            if (r == 1) return {Condition::Star, Condition::R1Delta};
            return {Condition::Star, Condition::Star2, Condition::Star3, Condition::Hash};
    }
    return {};
}

bool DeltaSweep::prerequisites_hold() const {
    return std::all_of(prerequisites.begin(), prerequisites.end(), [](const Certificate& c) { return c.passed(); });
}

DeltaSweep sweep_deltas(const ConstructionParams& p, Exec exec) {
    ConstructionParams base = p.with_family(Family::C2, Elem{0});
    base.validate();
    DeltaSweep out;
    const std::vector<Condition> pre = p.r == 1 ? std::vector<Condition>{Condition::Star}
                                                : std::vector<Condition>{Condition::Star, Condition::Star2,
                                                                         Condition::Star3};
    ConstructionParams undelta = base;
    undelta.delta.reset();
    for (Condition c : pre) out.prerequisites.push_back(check_condition(c, undelta, exec));

    const Condition which = p.r == 1 ? Condition::R1Delta : Condition::Hash;
    const auto q = static_cast<std::int64_t>(p.field().order());
    std::vector<char> ok(static_cast<std::size_t>(q), 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(exec == Exec::Parallel ? worker_threads() : 1)
    for (std::int64_t d = 0; d < q; ++d) {
        ConstructionParams pd = base;
        pd.delta = static_cast<Elem>(d);
        ok[static_cast<std::size_t>(d)] = check_condition(which, pd, Exec::Serial).passed();
    }
    for (std::int64_t d = 0; d < q; ++d) {
        const bool pass = ok[static_cast<std::size_t>(d)] != 0;
        out.per_delta.emplace_back(static_cast<Elem>(d), pass);
        if (pass) out.admissible.push_back(static_cast<Elem>(d));
    }
    return out;
}

std::vector<Elem> admissible_deltas(const ConstructionParams& p, Exec exec) { return sweep_deltas(p, exec).admissible; }

std::vector<Elem> extension_vector(Family stage, const ConstructionParams& p) {
    const Field& f = p.field();
    const auto pts = p.alphas.points();
    const unsigned k = p.k;
    const auto exps = generator_exponents(k, p.r);
    if (stage == Family::C1) {
        ConstructionParams base = p.with_family(Family::CRK);
        base.validate();
        std::vector<unsigned> full(k + 1);
        for (unsigned e = 0; e <= k; ++e) full[e] = e;
        std::vector<Elem> target(k + 1, 0);
        target[k] = 1;
        const auto w = solve_linear(power_rows(f, pts, full), target);
        if (!w) throw std::logic_error("Vandermonde system inconsistent");
        std::vector<Elem> unit(k, 0);
        unit[k - 1] = 1;
        check_vector(build_generator(base), *w, unit);
        return *w;
    }
    if (stage != Family::C2) throw std::invalid_argument("extension stage must be C1 or C2");
    if (!p.delta) throw std::invalid_argument("stage C2 extension needs delta");
    ConstructionParams c1 = p.with_family(Family::C1);
    c1.validate();
    // rows of G_{r,k} above the last one; the top exponent is k-1 (r >= 2) or k-2 (r = 1)
    const unsigned top = exps[k - 2];
    std::vector<unsigned> full(top + 1);
    for (unsigned e = 0; e <= top; ++e) full[e] = e;
    std::vector<Elem> target(top + 1, 0);
    target[top] = 1;
    const auto v = solve_linear(power_rows(f, pts, full), target);
    if (!v) throw std::logic_error("Vandermonde system inconsistent");
    Elem acc = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) acc = f.add(acc, f.mul(f.pow(pts[i], k), (*v)[i]));
    std::vector<Elem> w = *v;
    w.push_back(f.sub(*p.delta, acc));
    std::vector<Elem> expect(k, 0);
    expect[k - 2] = 1;
    expect[k - 1] = *p.delta;
    check_vector(build_generator(c1), w, expect);
    return w;
}

std::vector<Elem> encode_polynomial(const SparsePolynomial& poly, const ConstructionParams& p) {
    p.validate();
    const Field& f = p.field();
    const unsigned k = p.k;
    for (const auto& [deg, c] : poly.coeffs) {
        if (!f.contains(c)) throw std::invalid_argument("coefficient is not a field element");
        if (c == 0) continue;
        if (deg > k) throw std::invalid_argument("polynomial degree exceeds k");
        if (deg == k - p.r) throw std::invalid_argument("polynomial has a nonzero coefficient at degree k-r");
    }
    std::vector<Elem> out;
    for (Elem a : p.alphas.points()) {
        Elem acc = 0;
        for (unsigned d = k + 1; d-- > 0;) acc = f.add(f.mul(acc, a), poly.coeff(d));
        out.push_back(acc);
    }
    if (p.family == Family::CRK) return out;
    const Elem fk = poly.coeff(k);
    out.push_back(fk);
    if (p.family == Family::C1) return out;
    const unsigned j = p.r > 1 ? 1 : 2;
    out.push_back(f.add(poly.coeff(k - j), f.mul(*p.delta, fk)));
    return out;
}

std::vector<EvalSet> search_eval_sets(const SearchRequest& req) {
    const Field& f = req.field;
    if (req.n > f.order()) throw std::invalid_argument("need n <= q");
    std::vector<EvalSet> found;
    if (req.limit == 0) return found;

    auto passes = [&](const EvalSet& s) {
        ConstructionParams p{req.delta ? Family::C2 : Family::CRK, s, req.k, req.r, req.delta};
        for (Condition c : req.required)
            if (!check_condition(c, p, Exec::Serial).passed()) return false;
        return true;
    };

    switch (req.strategy) {
        case SearchStrategy::Consecutive: {
            EvalSet s = EvalSet::consecutive(f, req.n);
            if (passes(s)) found.push_back(std::move(s));
            break;
        }
        case SearchStrategy::Exhaustive: {
            const auto q = static_cast<unsigned>(f.order());
            std::vector<unsigned> c(req.n);
            for (unsigned i = 0; i < req.n; ++i) c[i] = i;
            std::uint64_t tried = 0;
            do {
                if (++tried > req.max_candidates) throw SizeGuardError("exhaustive search exceeded candidate cap");
                EvalSet s(f, std::vector<Elem>(c.begin(), c.end()));
                if (passes(s)) {
                    found.push_back(std::move(s));
                    if (found.size() >= req.limit) break;
                }
            } while (next_combination(c, q));
            break;
        }
        case SearchStrategy::Randomized: {
            std::mt19937_64 rng(req.seed);
            std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
            std::set<std::vector<Elem>> seen;
            const std::uint64_t distinct_sets = binomial(f.order(), req.n);
            for (std::uint64_t tried = 0; tried < req.max_candidates && found.size() < req.limit; ++tried) {
                if (seen.size() >= distinct_sets) break;
                std::set<Elem> pts;
                while (pts.size() < req.n) pts.insert(pick(rng));
                std::vector<Elem> v(pts.begin(), pts.end());
                if (!seen.insert(v).second) continue;
                EvalSet s(f, std::move(v));
                if (passes(s)) found.push_back(std::move(s));
            }
            break;
        }
    }
    return found;
}

}  // namespace nongrs
