// SPDX-License-Identifier: Apache-2.0

#include <set>

#include "doctest.h"
#include "nongrs/constructions.hpp"
#include "nongrs/symmetric.hpp"
#include "oracle.hpp"

using namespace nongrs;

namespace {

const Field f17(FieldSpec::prime(17));
const EvalSet example_alphas(f17, {0, 1, 5, 3, 8, 6});

ConstructionParams example(Family fam, std::optional<Elem> delta = std::nullopt) {
    return ConstructionParams{fam, example_alphas, 3, 2, delta};
}

bool orthogonal(const FieldMatrix& g, const FieldMatrix& h) {
    const FieldMatrix z = g * h.transpose();
    for (Elem v : z.data())
        if (v != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("generators match the printed matrices") {
    CHECK(generator_exponents(3, 2) == std::vector<unsigned>{0, 2, 3});
    CHECK(generator_exponents(3, 1) == std::vector<unsigned>{0, 1, 3});
    CHECK(build_generator(example(Family::CRK)) ==
          FieldMatrix::from_rows(f17, {{1, 1, 1, 1, 1, 1}, {0, 1, 8, 9, 13, 2}, {0, 1, 6, 10, 2, 12}}));
    CHECK(build_generator(example(Family::C1)) ==
          FieldMatrix::from_rows(f17, {{1, 1, 1, 1, 1, 1, 0}, {0, 1, 8, 9, 13, 2, 0}, {0, 1, 6, 10, 2, 12, 1}}));
    CHECK(build_generator(example(Family::C2, 2)) ==
          FieldMatrix::from_rows(
              f17, {{1, 1, 1, 1, 1, 1, 0, 0}, {0, 1, 8, 9, 13, 2, 0, 1}, {0, 1, 6, 10, 2, 12, 1, 2}}));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_generator(ConstructionParams{Family::CRK, example_alphas, 3, 3, std::nullopt}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_generator(ConstructionParams{Family::CRK, example_alphas, 3, 0, std::nullopt}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_generator(ConstructionParams{Family::CRK, example_alphas, 6, 2, std::nullopt}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_generator(example(Family::C2)), std::invalid_argument);
    CHECK_THROWS_AS(build_generator(example(Family::C1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(build_generator(example(Family::C2, 17)), std::invalid_argument);
    CHECK(example(Family::CRK).in_theorem_range());
    CHECK_FALSE(ConstructionParams({Family::CRK, EvalSet::consecutive(f17, 5), 3, 2, std::nullopt}).in_theorem_range());
    CHECK(family_from_string("c2") == Family::C2);
    CHECK_THROWS_AS(family_from_string("c3"), std::invalid_argument);
    CHECK(condition_from_string("hash") == Condition::Hash);
    CHECK(strategy_from_string("randomized") == SearchStrategy::Randomized);
}

TEST_CASE("closed-form parity checks") {
    const FieldMatrix h = build_parity(example(Family::CRK));
    CHECK(h.rows() == 3);
    const auto u = dual_weights(example_alphas);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(h(0, i) == u[i]);
        CHECK(h(1, i) == f17.mul(u[i], example_alphas[i]));
        CHECK(h(2, i) == f17.mul(u[i], lambda_weight(2, i, example_alphas, 3)));
    }
    CHECK(orthogonal(build_generator(example(Family::CRK)), h));
    const FieldMatrix h1 = build_parity(example(Family::C1));
    CHECK(h1.rows() == 4);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 6; ++j) CHECK(h1(i, j) == h(i, j));
        CHECK(h1(i, 6) == 0);
    }
    CHECK(h1(3, 6) == 16);
    CHECK(orthogonal(build_generator(example(Family::C1)), h1));
    for (Elem d = 0; d < 17; ++d) CHECK(orthogonal(build_generator(example(Family::C2, d)), build_parity(example(Family::C2, d))));

    const Field f11(FieldSpec::prime(11));
    const ConstructionParams r1{Family::C2, EvalSet(f11, {1, 2, 3, 4, 5}), 2, 1, Elem{0}};
    const FieldMatrix h2 = build_parity(r1);
    CHECK(orthogonal(build_generator(r1), h2));
    CHECK(h2(h2.rows() - 1, 5) == f11.sub(0, complete(f11, 2, r1.alphas.points())));
    CHECK(row_space_equal(h2, build_code(r1).parity_check()));
}

TEST_CASE("condition certificates") {
    CHECK(check_condition(Condition::Star, example(Family::CRK)).passed());
    CHECK(check_condition(Condition::Star2, example(Family::CRK)).passed());
    const Certificate vac = check_condition(Condition::Star3, example(Family::CRK));
    CHECK(vac.passed());
    CHECK(vac.params["vacuous"] == true);
    const ConstructionParams r1{Family::CRK, example_alphas, 3, 1, std::nullopt};
    CHECK(check_condition(Condition::Star2, r1).params["vacuous"] == true);

    const Field f5(FieldSpec::prime(5));
    const ConstructionParams small{Family::CRK, EvalSet(f5, {1, 4, 2}), 2, 1, std::nullopt};
    const Certificate fail = check_condition(Condition::Star, small);
    CHECK(fail.failed());
    CHECK(fail.witness["subset"] == nlohmann::json::array({1, 4}));
    CHECK(fail.kind == CertKind::Condition);
    CHECK(fail.params["condition"] == "STAR");

    CHECK_THROWS_AS(check_condition(Condition::Hash, example(Family::CRK)), std::invalid_argument);
    CHECK_THROWS_AS(check_condition(Condition::Hash, r1.with_family(Family::C2, Elem{1})), std::invalid_argument);
    CHECK_THROWS_AS(check_condition(Condition::R1Delta, example(Family::C2, 1)), std::invalid_argument);

    // witnesses from serial and parallel sweeps coincide and really violate the condition
    const Field f13(FieldSpec::prime(13));
    const auto o = oracle::F::prime(13);
    for (Elem d = 0; d < 13; ++d) {
        const ConstructionParams p{Family::C2, EvalSet(f13, {3, 1, 4, 12, 5, 9, 2}), 3, 2, d};
        const Certificate s = check_condition(Condition::Hash, p, Exec::Serial);
        const Certificate q = check_condition(Condition::Hash, p, Exec::Parallel);
        CHECK(s == q);
        if (s.failed()) {
            const auto t = s.witness["subset"].get<std::vector<Elem>>();
            const auto s1 = oracle::sigma(o, 1, t), s2 = oracle::sigma(o, 2, t);
            // delta*s1 - s1*s1 + s2 (r = 2)
            CHECK(o.add(o.sub(o.mul(d, s1), o.mul(s1, s1)), s2) == 0);
        }
    }
}

TEST_CASE("admissible deltas") {
    CHECK(admissible_deltas(example(Family::CRK)) == std::vector<Elem>{0, 2, 9, 12, 14});
    const DeltaSweep sw = sweep_deltas(example(Family::CRK));
    CHECK(sw.prerequisites_hold());
    CHECK(sw.per_delta.size() == 17);

    // r = 1 against the inequality directly
    const Field f11(FieldSpec::prime(11));
    const auto o = oracle::F::prime(11);
    const EvalSet s(f11, {0, 1, 2, 3, 4});
    const ConstructionParams p{Family::CRK, s, 3, 1, std::nullopt};
    std::vector<Elem> expect;
    for (Elem d = 0; d < 11; ++d) {
        bool ok = true;
        oracle::subsets(5, 2, [&](const std::vector<std::size_t>& c) {
            const std::vector<oracle::u64> t{s[c[0]], s[c[1]]};
            const auto s1 = oracle::sigma(o, 1, t);
            if (o.add(o.sub(d, o.mul(s1, s1)), oracle::sigma(o, 2, t)) == 0) ok = false;
        });
        if (ok) expect.push_back(d);
    }
    CHECK(admissible_deltas(p) == expect);
    CHECK(admissible_deltas(p, Exec::Serial) == expect);
}

TEST_CASE("extension vectors") {
    const Field f7(FieldSpec::prime(7));
    const ConstructionParams p{Family::CRK, EvalSet(f7, {1, 2, 3, 4}), 2, 1, std::nullopt};
    const auto w = extension_vector(Family::C1, p);
    // y_i = prod_{j != i, j <= 3} (a_i - a_j)^{-1}
    CHECK(w == std::vector<Elem>{4, 6, 4, 0});
    CHECK(extend_code(build_code(p), w).generator() == build_generator(p.with_family(Family::C1)));

    for (Elem d = 0; d < 17; ++d) {
        const auto w2 = extension_vector(Family::C2, example(Family::C2, d));
        CHECK(w2.size() == 7);
        CHECK(extend_code(build_code(example(Family::C1)), w2).generator() == build_generator(example(Family::C2, d)));
    }
    CHECK_THROWS_AS(extension_vector(Family::C2, example(Family::CRK)), std::invalid_argument);
    CHECK_THROWS_AS(extension_vector(Family::CRK, example(Family::CRK)), std::invalid_argument);
}

TEST_CASE("polynomial encoding") {
    SparsePolynomial one;
    one.coeffs[0] = 1;
    CHECK(encode_polynomial(one, example(Family::C2, 4)) == std::vector<Elem>{1, 1, 1, 1, 1, 1, 0, 0});
    SparsePolynomial xk;
    xk.coeffs[3] = 1;
    const auto c1 = encode_polynomial(xk, example(Family::C1));
    CHECK(c1 == std::vector<Elem>{0, 1, 6, 10, 2, 12, 1});
    SparsePolynomial mix;
    mix.coeffs[2] = 1;
    mix.coeffs[3] = 1;
    const auto c2 = encode_polynomial(mix, example(Family::C2, 4));
    CHECK(c2[6] == 1);
    CHECK(c2[7] == 5);
    CHECK(build_code(example(Family::C2, 4)).contains(c2));
    SparsePolynomial gap;
    gap.coeffs[1] = 3;
    CHECK_THROWS_AS(encode_polynomial(gap, example(Family::CRK)), std::invalid_argument);
    SparsePolynomial high;
    high.coeffs[4] = 1;
    CHECK_THROWS_AS(encode_polynomial(high, example(Family::CRK)), std::invalid_argument);
    // r = 1 uses f_{k-2}
    const ConstructionParams r1{Family::C2, example_alphas, 3, 1, Elem{5}};
    SparsePolynomial p1;
    p1.coeffs[1] = 2;
    p1.coeffs[3] = 1;
    const auto e = encode_polynomial(p1, r1);
    CHECK(e[7] == 7);
    CHECK(build_code(r1).contains(e));
}

TEST_CASE("evaluation-set search") {
    const Field f53(FieldSpec::prime(53));
    SearchRequest a{.field = f53, .n = 6, .k = 3, .r = 2, .required = {Condition::Star, Condition::Star2}};
    const auto found = search_eval_sets(a);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == EvalSet::consecutive(f53, 6));

    const Field f23(FieldSpec::prime(23));
    SearchRequest b{.field = f23, .n = 9, .k = 3, .r = 1, .required = {Condition::Star}};
    CHECK(search_eval_sets(b).size() == 1);

    // q=5, n=4, k=2, r=1: every 4-subset of F_5 contains a pair summing to 0
    const Field f5(FieldSpec::prime(5));
    SearchRequest c{.field = f5, .n = 4, .k = 2, .r = 1, .strategy = SearchStrategy::Exhaustive,
                    .required = {Condition::Star}, .limit = 100};
    CHECK(search_eval_sets(c).empty());
    c.n = 2;
    const auto pairs = search_eval_sets(c);
    CHECK(pairs.size() == 8);  // C(5,2) minus {1,4},{2,3}
    for (const auto& s : pairs) CHECK(f5.add(s[0], s[1]) != 0);

    const Field f13(FieldSpec::prime(13));
    SearchRequest d{.field = f13, .n = 6, .k = 3, .r = 2, .strategy = SearchStrategy::Randomized,
                    .required = {Condition::Star, Condition::Star2}, .limit = 5, .seed = 42};
    const auto r1 = search_eval_sets(d);
    const auto r2 = search_eval_sets(d);
    CHECK(r1 == r2);
    CHECK(r1.size() == 5);
    std::set<std::vector<Elem>> uniq;
    for (const auto& s : r1) {
        uniq.insert({s.points().begin(), s.points().end()});
        CHECK(check_condition(Condition::Star, {Family::CRK, s, 3, 2, std::nullopt}).passed());
    }
    CHECK(uniq.size() == 5);
    d.seed = 43;
    CHECK_FALSE(search_eval_sets(d) == r1);

    SearchRequest e = d;
    e.strategy = SearchStrategy::Exhaustive;
    e.max_candidates = 10;
    e.required = {Condition::Star3};  // vacuous, so the cap is what stops it
    e.limit = 100;
    CHECK_THROWS_AS(search_eval_sets(e), SizeGuardError);
}
