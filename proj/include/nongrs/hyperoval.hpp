// SPDX-License-Identifier: Apache-2.0

#ifndef NONGRS_HYPEROVAL_HPP
#define NONGRS_HYPEROVAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nongrs/certificate.hpp"
#include "nongrs/kernels.hpp"
#include "nongrs/matrix.hpp"

namespace nongrs {

/// 3 x (q+2) matrix with columns (1, a, f(a))^T for a in canonical order,
/// then (0,1,0)^T and (0,0,1)^T. `table[a]` is f(a). Characteristic 2 only.
FieldMatrix build_Go(const Field& f, std::span<const Elem> table);

/// Pass iff no three columns of build_Go are dependent, i.e. the points
/// form a hyperoval. The witness is the first dependent column triple.
/// Limited to q <= 256.
Certificate is_o_polynomial_bruteforce(const Field& f, std::span<const Elem> table, Exec exec = Exec::Parallel);

/// Table of x^h over the field.
std::vector<Elem> monomial_table(const Field& f, std::uint64_t h);

struct OMonomialReport {
    std::uint64_t q = 0;
    std::uint64_t h = 0;
    bool gcd_ok = false;  // gcd(h, q-1) == 1
    Verdict verdict = Verdict::Fail;
    std::optional<std::array<Elem, 3>> witness;  // triple with S_{h-2} = 0

    bool passed() const { return verdict == Verdict::Pass; }
    friend bool operator==(const OMonomialReport&, const OMonomialReport&) = default;
};

/// S_{h-2}(a,b,c) != 0 for every triple of distinct elements. When
/// gcd(h, q-1) != 1 the verdict is Fail with gcd_ok = false and no search.
OMonomialReport is_o_monomial(const Field& f, std::uint64_t h, Exec exec = Exec::Parallel);

/// is_o_monomial for h = 1..q-2 over F_{2^m} with the default polynomial.
std::vector<OMonomialReport> enumerate_o_monomials(unsigned m, Exec exec = Exec::Parallel);

/// S_t(a,b,c) by the three-term recurrence.
Elem complete3(const Field& f, long t, Elem a, Elem b, Elem c);

}  // namespace nongrs

#endif
