// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP kernels on desk-scale instances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "nongrs/code.hpp"
#include "nongrs/constructions.hpp"
#include "nongrs/hyperoval.hpp"

using namespace nongrs;

namespace {

double time_ms(const std::function<void()>& fn, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

std::vector<Elem> consecutive_from(Elem start, std::size_t n) {
    std::vector<Elem> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = start + i;
    return v;
}

void row(const std::string& name, const std::function<void(Exec)>& fn) {
    const double s = time_ms([&] { fn(Exec::Serial); });
    const double p = time_ms([&] { fn(Exec::Parallel); });
    std::printf("%-36s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx\n", name.c_str(), s, p, s / p);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", worker_threads());

    const Field f97(FieldSpec::prime(97));
    // Reed-Solomon, so every minor is visited
    const std::vector<unsigned> rs_exps{0, 1, 2, 3, 4};
    const LinearCode c_big(power_rows(f97, EvalSet::consecutive(f97, 40).points(), rs_exps));
    row("first_singular_minor RS [40,5]_97", [&](Exec e) { (void)first_singular_minor(c_big.generator(), e); });

    const Field f31(FieldSpec::prime(31));
    const ConstructionParams mid{Family::C1, EvalSet::consecutive(f31, 20), 4, 2, std::nullopt};
    const LinearCode c_mid = build_code(mid);
    row("min_weight [21,4]_31", [&](Exec e) { (void)min_weight(c_mid.generator(), e); });

    // small consecutive points never sum to zero, so the sweep runs to the end
    const Field f1009(FieldSpec::prime(1009));
    const ConstructionParams cond{Family::CRK, EvalSet(f1009, consecutive_from(1, 40)), 5, 1, std::nullopt};
    row("STAR sweep n=40 k=5 over F_1009", [&](Exec e) { (void)check_condition(Condition::Star, cond, e); });

    const Field f128(FieldSpec::gf2m(7));
    row("o-monomial triples q=128 h=6", [&](Exec e) { (void)is_o_monomial(f128, 6, e); });
    row("hyperoval minors q=128 x^6", [&](Exec e) { (void)is_o_polynomial_bruteforce(f128, monomial_table(f128, 6), e); });
    return 0;
}
