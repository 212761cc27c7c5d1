// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "nongrs/code.hpp"
#include "oracle.hpp"

using namespace nongrs;

namespace {

oracle::F oracle_of(const Field& f) {
    if (f.kind() == FieldKind::Prime) return oracle::F::prime(f.spec().p);
    return oracle::F::gf2(f.spec().m, f.spec().poly);
}

oracle::Mat to_oracle(const FieldMatrix& m) {
    oracle::Mat out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
    return out;
}

}  // namespace

TEST_CASE("covering radius examples") {
    const Field f2(FieldSpec::prime(2));
    CHECK(covering_radius(LinearCode(FieldMatrix::from_rows(f2, {{1, 1, 1}}))) == 1);
    const Field f5(FieldSpec::prime(5));
    CHECK(covering_radius(LinearCode(FieldMatrix::identity(f5, 3))) == 0);
    // [7,4] Hamming code is perfect
    const LinearCode ham(FieldMatrix::from_rows(
        f2, {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}}));
    CHECK(covering_radius(ham) == 1);
    Guards g;
    g.coset_work = 1000;
    const Field f17(FieldSpec::prime(17));
    CHECK_THROWS_AS(covering_radius(LinearCode(FieldMatrix::from_rows(f17, {{1, 1, 1, 1}})), g), SizeGuardError);
}

TEST_CASE("covering radius matches exhaustive distance computation") {
    std::mt19937_64 rng(71);
    int checked = 0;
    for (const Field& f : {Field(FieldSpec::prime(2)), Field(FieldSpec::prime(3)), Field(FieldSpec::prime(5)),
                           Field(FieldSpec::gf2m(2))}) {
        for (int iter = 0; iter < 40; ++iter) {
            const std::size_t n = 2 + rng() % (f.order() <= 3 ? 5 : 3);
            const std::size_t k = 1 + rng() % (n - 1);
            FieldMatrix g(f, k, n);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < n; ++j) g(i, j) = rng() % f.order();
            if (rank(g) != k) continue;
            const LinearCode c(g);
            const auto o = oracle_of(f);
            const auto og = to_oracle(g);
            REQUIRE(covering_radius(c) == oracle::covering_radius(o, og));
            const SyndromeTable table(c);
            const auto words = oracle::span(o, og);
            // every word: coset weight equals distance to the code, and the leader is consistent
            std::vector<Elem> x(n, 0);
            for (int s = 0; s < 30; ++s) {
                for (auto& v : x) v = rng() % f.order();
                const auto idx = table.index(table.syndrome(x));
                REQUIRE(table.coset_weight(idx) == oracle::distance_to(words, x, o));
                const auto e = table.leader(idx);
                REQUIRE(oracle::weight(e) == table.coset_weight(idx));
                std::vector<Elem> diff(n);
                for (std::size_t j = 0; j < n; ++j) diff[j] = f.sub(x[j], e[j]);
                REQUIRE(c.contains(diff));
                const Certificate hole = is_deep_hole(c, x);
                REQUIRE(hole.passed() == (table.coset_weight(idx) == table.covering_radius()));
                if (hole.failed()) {
                    const auto nearest = hole.witness["nearest_codeword"].get<std::vector<Elem>>();
                    REQUIRE(c.contains(nearest));
                    REQUIRE(hole.witness["distance"].get<std::size_t>() == oracle::distance_to(words, x, o));
                }
            }
            ++checked;
        }
    }
    CHECK(checked > 60);
}

TEST_CASE("deep hole edge cases") {
    const Field f3(FieldSpec::prime(3));
    const LinearCode rep(FieldMatrix::from_rows(f3, {{1, 1, 1}}));
    const std::vector<Elem> zero{0, 0, 0};
    const Certificate inside = is_deep_hole(rep, zero);
    CHECK(inside.failed());
    CHECK(inside.witness["distance"] == 0);
    CHECK(inside.kind == CertKind::CoveringRadius);
    const LinearCode full(FieldMatrix::identity(f3, 3));
    CHECK(is_deep_hole(full, zero).passed());
    CHECK_THROWS_AS(is_deep_hole(rep, std::vector<Elem>{0, 0}), std::invalid_argument);
}

TEST_CASE("dual of the [6,3]_17 code has covering radius 3 and a deep hole from the extension") {
    const Field f17(FieldSpec::prime(17));
    const std::vector<unsigned> exps{0, 2, 3};
    const std::vector<Elem> pts{0, 1, 5, 3, 8, 6};
    const LinearCode c(power_rows(f17, pts, exps));
    const LinearCode d = dual(c);
    CHECK(covering_radius(d) == 3);
    const std::vector<Elem> target{0, 0, 0, 1};
    const auto w = solve_linear(vandermonde_family(VandermondeKind::Full, EvalSet(f17, {0, 1, 5, 3})), target);
    REQUIRE(w);
    std::vector<Elem> full = *w;
    full.resize(6, 0);
    REQUIRE(c.generator().apply(full) == std::vector<Elem>{0, 0, 1});
    CHECK(is_deep_hole(d, full).passed());
    // a point at distance 2 is not a deep hole
    const SyndromeTable t(d);
    for (std::uint64_t s = 0; s < t.syndrome_count(); ++s) {
        if (t.coset_weight(s) != 2) continue;
        const Certificate c2 = is_deep_hole(d, t.leader(s));
        CHECK(c2.failed());
        CHECK(c2.witness["distance"] == 2);
        break;
    }
}
