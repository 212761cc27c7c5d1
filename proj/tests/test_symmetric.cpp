// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <random>

#include "doctest.h"
#include "nongrs/symmetric.hpp"
#include "oracle.hpp"

using namespace nongrs;

namespace {

EvalSet random_set(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::vector<Elem> all = f.elements();
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(n);
    return EvalSet(f, all);
}

}  // namespace

TEST_CASE("elementary and complete examples") {
    const Field f17(FieldSpec::prime(17));
    const Field f7(FieldSpec::prime(7));
    const EvalSet a(f17, {0, 1, 5});
    CHECK(elementary(0, a).value() == 1);
    CHECK(elementary(2, a).value() == 5);
    CHECK(elementary(4, EvalSet(f17, {1, 2, 3})).value() == 0);
    CHECK(complete(0, a).value() == 1);
    CHECK(complete(-3, a).value() == 0);
    CHECK(complete(2, EvalSet(f7, {1, 2})).value() == 0);
    CHECK(complete(2, EvalSet(f17, {1, 2, 3})).value() == 8);
}

TEST_CASE("lambda weights and dual weights") {
    const Field f7(FieldSpec::prime(7));
    const EvalSet s(f7, {1, 2, 3, 4});
    CHECK(lambda_weight(1, 0, s, 2) == 5);
    CHECK_THROWS_AS(lambda_weight(1, 0, s, 4), std::invalid_argument);
    CHECK_THROWS_AS(lambda_weight(0, 0, s, 2), std::invalid_argument);

    const Field f17(FieldSpec::prime(17));
    const EvalSet p(f17, {0, 1, 5, 3, 8, 6});
    const auto o = oracle::F::prime(17);
    const std::vector<oracle::u64> pts{0, 1, 5, 3, 8, 6};
    // n-k + r-1 - j with n=6, k=3, r=2: exponents 4, 3, 2
    for (std::size_t i = 0; i < 6; ++i) {
        oracle::u64 expect = 0;
        for (unsigned j = 0; j <= 2; ++j) {
            const auto term = o.mul(oracle::sigma(o, j, pts), o.pow(pts[i], 4 - j));
            expect = j % 2 ? o.sub(expect, term) : o.add(expect, term);
        }
        CHECK(lambda_weight(2, i, p, 3) == expect);
    }

    CHECK(dual_weights(EvalSet(f7, {1, 2, 3})) == std::vector<Elem>{4, 6, 4});
    const Field f2(FieldSpec::prime(2));
    CHECK(dual_weights(EvalSet(f2, {0, 1})) == std::vector<Elem>{1, 1});
    CHECK_THROWS_AS(dual_weights(EvalSet(f7, {3})), std::invalid_argument);
}

TEST_CASE("EvalSet invariants") {
    const Field f(FieldSpec::prime(5));
    CHECK_THROWS_AS(EvalSet(f, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(EvalSet(f, {5}), std::invalid_argument);
    CHECK_THROWS_AS(EvalSet(f, {}), std::invalid_argument);
    CHECK_THROWS_AS(EvalSet::consecutive(f, 6), std::invalid_argument);
    CHECK(EvalSet::consecutive(f, 3) == EvalSet(f, {0, 1, 2}));
    CHECK(EvalSet(f, {3, 0, 2}).sorted() == EvalSet(f, {0, 2, 3}));
    CHECK(EvalSet(f, {3, 0, 2}).prefix(2) == EvalSet(f, {3, 0}));
}

TEST_CASE("sigma and S agree with subset and monomial enumeration") {
    std::mt19937_64 rng(17);
    for (const Field& f : {Field(FieldSpec::prime(5)), Field(FieldSpec::prime(13)), Field(FieldSpec::prime(17)),
                           Field(FieldSpec::gf2m(3)), Field(FieldSpec::gf2m(4))}) {
        const auto o = f.kind() == FieldKind::Prime ? oracle::F::prime(f.spec().p)
                                                    : oracle::F::gf2(f.spec().m, f.spec().poly);
        for (int iter = 0; iter < 60; ++iter) {
            const std::size_t n = 1 + rng() % std::min<std::size_t>(6, f.order());
            const EvalSet s = random_set(f, n, rng);
            const std::vector<Elem> pts(s.points().begin(), s.points().end());
            for (std::size_t t = 0; t <= n + 1; ++t) REQUIRE(elementary(t, s).value() == oracle::sigma(o, t, pts));
            if (n <= 4)
                for (long t = -2; t <= 5; ++t) REQUIRE(complete(t, s).value() == oracle::complete(o, t, pts));
            // permutation invariance
            std::vector<Elem> perm = pts;
            std::shuffle(perm.begin(), perm.end(), rng);
            const EvalSet sp(f, perm);
            for (std::size_t t = 0; t <= n; ++t) REQUIRE(elementary(t, sp) == elementary(t, s));
            for (long t = 0; t <= 6; ++t) REQUIRE(complete(t, sp) == complete(t, s));
        }
    }
}

TEST_CASE("sigma/S relation and power sums of dual weights") {
    std::mt19937_64 rng(23);
    for (std::uint64_t p : {7, 11, 13, 17}) {
        const Field f(FieldSpec::prime(p));
        for (int iter = 0; iter < 50; ++iter) {
            const std::size_t n = 2 + rng() % 5;
            const EvalSet s = random_set(f, n, rng);
            const auto pts = s.points();
            for (std::size_t N = 1; N <= 8; ++N) {
                Elem acc = 0;
                for (std::size_t t = 0; t <= N; ++t) {
                    const Elem term = f.mul(elementary(f, t, pts), complete(f, static_cast<long>(N - t), pts));
                    acc = t % 2 ? f.sub(acc, term) : f.add(acc, term);
                }
                REQUIRE(acc == 0);
            }
            const auto u = dual_weights(s);
            Elem usum = 0;
            for (Elem x : u) {
                REQUIRE(x != 0);
                usum = f.add(usum, x);
            }
            REQUIRE(usum == 0);
            for (unsigned h = 1; h <= n + 4; ++h) {
                Elem acc = 0;
                for (std::size_t i = 0; i < n; ++i) acc = f.add(acc, f.mul(u[i], f.pow(pts[i], h)));
                if (h <= n - 2)
                    REQUIRE(acc == 0);
                else
                    REQUIRE(acc == complete(f, static_cast<long>(h) - static_cast<long>(n) + 1, pts));
            }
        }
    }
}

TEST_CASE("truncated vectors match single evaluations") {
    const Field f(FieldSpec::gf2m(5));
    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 50; ++iter) {
        const EvalSet s = random_set(f, 1 + rng() % 8, rng);
        const auto e = elementary_upto(f, s.points(), 10);
        const auto c = complete_upto(f, s.points(), 10);
        for (std::size_t t = 0; t <= 10; ++t) {
            REQUIRE(e[t] == elementary(f, t, s.points()));
            REQUIRE(c[t] == complete(f, static_cast<long>(t), s.points()));
        }
    }
}
