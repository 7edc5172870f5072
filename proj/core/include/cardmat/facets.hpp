#pragma once

#include "cardmat/cardinality.hpp"
#include "cardmat/inequality.hpp"
#include "cardmat/matroid.hpp"
#include "cardmat/subset.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cardmat {

struct FacetVerdict {
    bool is_facet = false;
    long dim_face = -1; // affine rank of tight vertices minus one; -1 if none
    std::size_t dim_polytope = 0;
    std::vector<Subset> witness; // tight sets spanning the face
};

/// Reference facet test by enumeration: checks ineq is valid on every vertex
/// of P^c (throws "not-valid" with a witness vertex otherwise), then compares
/// the affine rank of the tight vertices against the polytope dimension.
/// Accepts single-member c (single-cardinality polytopes).
FacetVerdict facet_oracle(const MatroidInstance& m, const CardinalitySequence& c,
                          const LinearInequality& ineq,
                          std::size_t limit = kDefaultEnumerationLimit);

/// Affine dimension of P^c by enumeration. Accepts single-member c.
std::size_t polytope_dimension(const MatroidInstance& m, const CardinalitySequence& c,
                               std::size_t limit = kDefaultEnumerationLimit);

/// Is x(f) <= r(f) facet-defining for P^c? Evaluates the five predicate
/// clauses on closedness, (k-)inseparability and the rank/cardinality
/// relations; no enumeration.
bool rank_facet_verdict(const MatroidInstance& m, const Subset& f,
                        const CardinalitySequence& c,
                        std::size_t bipartition_limit = kDefaultBipartitionLimit);

struct FsFacetVerdict {
    bool is_facet = false;
    /// 'a': c_p = c_1 = 0 route (single-cardinality rank facet at c_{p+1});
    /// 'b': c_p > 0 route (closed + k-inseparability/rank conditions).
    char clause = '?';
    /// Set when clause 'a' could not rely on the predicate (the single-k
    /// polytope is not of dimension |E|-1) and fell back to enumeration.
    bool used_enumeration_fallback = false;
};

/// Is the forbidden-set cut of f facet-defining for P^c? Requires
/// build_fs(m, f, c) to be well-formed.
FsFacetVerdict fs_facet_verdict(const MatroidInstance& m, const Subset& f,
                                const CardinalitySequence& c,
                                std::size_t bipartition_limit = kDefaultBipartitionLimit,
                                std::size_t enumeration_limit = kDefaultEnumerationLimit);

struct SingleKVerdict {
    std::size_t k = 0;
    /// Predicted dim P^(k) = |E|-1 (E inseparable or k < r(E)).
    bool full_dimension = false;
    /// When f was given and full_dimension holds: is x(f) <= r(f) predicted
    /// facet-defining for P^(k)? nullopt when the dimension hypothesis fails
    /// (the prediction does not apply).
    std::optional<bool> rank_ineq_facet;
};

/// Predicate analysis of the single-cardinality polytope P^(k), 0 < k <= r(E).
SingleKVerdict single_k_predicates(const MatroidInstance& m,
                                   const std::optional<Subset>& f, std::size_t k,
                                   std::size_t bipartition_limit = kDefaultBipartitionLimit);

} // namespace cardmat
