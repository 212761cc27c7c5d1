// SPDX-License-Identifier: Apache-2.0

#ifndef NONGRS_SYMMETRIC_HPP
#define NONGRS_SYMMETRIC_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nongrs/evalset.hpp"

namespace nongrs {

// Conventions: sigma_0 = 1, sigma_t = 0 for t > n; S_0 = 1, S_t = 0 for t < 0.

/// sigma_0..sigma_tmax of `pts`, from the truncated product prod (1 + a x).
std::vector<Elem> elementary_upto(const Field& f, std::span<const Elem> pts, std::size_t tmax);

Elem elementary(const Field& f, std::size_t t, std::span<const Elem> pts);

/// Complete homogeneous symmetric polynomial via
/// S_N = sum_{t=1}^{min(N,n)} (-1)^{t+1} sigma_t S_{N-t}.
Elem complete(const Field& f, long t, std::span<const Elem> pts);

/// S_0..S_tmax in one pass.
std::vector<Elem> complete_upto(const Field& f, std::span<const Elem> pts, std::size_t tmax);

FieldElement elementary(std::size_t t, const EvalSet& s);
FieldElement complete(long t, const EvalSet& s);

/// Parity weight sum_{j=0}^{r} (-1)^j sigma_j a_i^{(n-k)+(r-1)-j} with sigma
/// over the whole set and n = |set|. `i` is 0-based. Throws
/// std::invalid_argument when an exponent would be negative (n <= k) or r < 1.
Elem lambda_weight(unsigned r, std::size_t i, const EvalSet& s, std::size_t k);

/// u_i = prod_{j != i} (a_i - a_j)^{-1}. Requires |set| >= 2.
std::vector<Elem> dual_weights(const EvalSet& s);

/// Raw-span variant used by the extension-vector builder.
std::vector<Elem> dual_weights(const Field& f, std::span<const Elem> pts);

}  // namespace nongrs

#endif
