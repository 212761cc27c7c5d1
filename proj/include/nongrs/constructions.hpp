// SPDX-License-Identifier: Apache-2.0

#ifndef NONGRS_CONSTRUCTIONS_HPP
#define NONGRS_CONSTRUCTIONS_HPP

// The three evaluation-code families built on V_{r,k}, the polynomials of
// degree <= k with no x^{k-r} term:
//   CRK  evaluations at the points                       k x n
//   C1   CRK plus the column (0,...,0,1)^T               k x (n+1)
//   C2   C1 plus the column (0,...,0,1,delta)^T           k x (n+2)

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nongrs/certificate.hpp"
#include "nongrs/code.hpp"
#include "nongrs/evalset.hpp"

namespace nongrs {

enum class Family { CRK, C1, C2 };

/// STAR   sigma_r   != 0 on every k-subset
/// STAR2  sigma_r-1 != 0 on every (k-1)-subset   (vacuous for r = 1)
/// STAR3  sigma_r-2 != 0 on every (k-2)-subset   (vacuous for r <= 2)
/// HASH   delta*s_{r-1} - s_1*s_{r-1} + s_r != 0 on every (k-1)-subset (r >= 2)
/// R1DELTA delta - s_1^2 + s_2 != 0 on every (k-1)-subset (r = 1)
enum class Condition { Star, Star2, Star3, Hash, R1Delta };

std::string to_string(Family f);
std::string to_string(Condition c);
Family family_from_string(const std::string& s);
Condition condition_from_string(const std::string& s);

struct ConstructionParams {
    Family family = Family::CRK;
    EvalSet alphas;
    unsigned k = 0;
    unsigned r = 0;
    std::optional<Elem> delta;  // C2 only

    const Field& field() const { return alphas.field(); }
    std::size_t n() const { return alphas.size(); }

    /// 1 <= r <= k-1, k < n <= q, delta present iff C2.
    void validate() const;
    /// 6 <= 2k <= n, the range in which the non-GRS theorems are stated.
    bool in_theorem_range() const;

    ConstructionParams with_family(Family f, std::optional<Elem> d = std::nullopt) const;
};

/// Exponents of the generator rows in ascending order: 0..k-r-1, k-r+1..k.
std::vector<unsigned> generator_exponents(unsigned k, unsigned r);

/// Polynomial in V_{r,k}; only degrees <= k other than k-r may be present.
struct SparsePolynomial {
    std::map<unsigned, Elem> coeffs;

    Elem coeff(unsigned d) const {
        auto it = coeffs.find(d);
        return it == coeffs.end() ? 0 : it->second;
    }
};

FieldMatrix build_generator(const ConstructionParams& p);
LinearCode build_code(const ConstructionParams& p);

/// Closed-form parity check built from the dual weights u_i and the
/// weights Lambda_{r,i}. Requires n - k >= 1.
FieldMatrix build_parity(const ConstructionParams& p);

/// Whether `which` holds on every relevant subset of the points. Subsets
/// are visited in lexicographic order of their sorted canonical values and
/// the first violation is the witness.
Certificate check_condition(Condition which, const ConstructionParams& p, Exec exec = Exec::Parallel);

/// Conditions whose conjunction is equivalent to MDS for the family.
std::vector<Condition> mds_conditions(Family family, unsigned r);

struct DeltaSweep {
    std::vector<Certificate> prerequisites;  // STAR, STAR2, STAR3 (as applicable)
    std::vector<std::pair<Elem, bool>> per_delta;
    std::vector<Elem> admissible;

    bool prerequisites_hold() const;
};

/// Evaluates HASH (r >= 2) or R1DELTA (r = 1) for every delta in F_q.
DeltaSweep sweep_deltas(const ConstructionParams& p, Exec exec = Exec::Parallel);
std::vector<Elem> admissible_deltas(const ConstructionParams& p, Exec exec = Exec::Parallel);

/// The w with G_{r,k} w^T = (0,...,0,1)^T supported on the first k+1
/// coordinates (stage C1), or the w' in F_q^{n+1} with
/// G_1 w'^T = (0,...,0,1,delta)^T (stage C2). Checked by substitution.
std::vector<Elem> extension_vector(Family stage, const ConstructionParams& p);

/// (f(a_1),...,f(a_n)) followed by f_k (C1) and f_k, f_{k-j} + delta f_k (C2),
/// j = 1 for r > 1 and j = 2 for r = 1.
std::vector<Elem> encode_polynomial(const SparsePolynomial& f, const ConstructionParams& p);

enum class SearchStrategy { Consecutive, Exhaustive, Randomized };

std::string to_string(SearchStrategy s);
SearchStrategy strategy_from_string(const std::string& s);

struct SearchRequest {
    Field field;
    std::size_t n = 0;
    unsigned k = 0;
    unsigned r = 0;
    SearchStrategy strategy = SearchStrategy::Consecutive;
    std::vector<Condition> required{};
    std::size_t limit = 1;
    std::uint64_t seed = 0;
    std::optional<Elem> delta{};  // needed when HASH / R1DELTA is required
    std::uint64_t max_candidates = std::uint64_t{1} << 24;
};

std::vector<EvalSet> search_eval_sets(const SearchRequest& req);

}  // namespace nongrs

#endif
