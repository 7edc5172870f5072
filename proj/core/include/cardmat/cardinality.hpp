#pragma once

#include "cardmat/matroid.hpp"
#include "cardmat/rational.hpp"
#include "cardmat/subset.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cardmat {

inline constexpr std::size_t kDefaultEnumerationLimit = 24;

/// Strictly increasing feasible cardinalities c_1 < ... < c_m. Constructed
/// with m >= 1; operations on the full sequence polytope require m >= 2
/// (require_pair), single-member sequences are reserved for the single-k
/// analysis entry points.
class CardinalitySequence {
public:
    explicit CardinalitySequence(std::vector<std::size_t> values);
    static CardinalitySequence single(std::size_t k);

    std::size_t size() const { return values_.size(); } // m
    std::size_t operator[](std::size_t i) const { return values_[i]; } // 0-based
    const std::vector<std::size_t>& values() const { return values_; }

    std::size_t front() const { return values_.front(); } // c_1
    std::size_t back() const { return values_.back(); }   // c_m

    bool contains(std::size_t k) const;

    /// 0-based index i with c[i] < rho < c[i+1], if any.
    std::optional<std::size_t> gap_level(std::size_t rho) const;

    /// Throws "sequence-too-short" unless m >= 2.
    void require_pair() const;
    /// Throws "cardinality-out-of-range" unless c_m <= r(E).
    void require_bound(const MatroidInstance& m) const;

private:
    std::vector<std::size_t> values_;
};

struct GreedyResult {
    Subset set;
    Rational value;
};

/// Maximum-weight independent set of cardinality exactly k (max-weight basis
/// of the k-truncation): scan elements by weight descending (index ascending
/// on ties), add while independent and below k. Negative weights are still
/// added to reach size k. nullopt iff k > r(E).
std::optional<GreedyResult> greedy_fixed_cardinality(const MatroidInstance& m,
                                                     const WeightVector& w,
                                                     std::size_t k);

/// Best greedy_fixed_cardinality result over the members of c; ties across
/// cardinalities resolve to the smaller one. Infeasible members (k > r(E))
/// are skipped; throws "infeasible" only if every member is.
GreedyResult optimize_chs(const MatroidInstance& m, const WeightVector& w,
                          const CardinalitySequence& c);

/// All independent sets whose cardinality is a member of c — the vertex set
/// of P^c — ordered by size, then lexicographically.
std::vector<Subset> enumerate_feasible(const MatroidInstance& m,
                                       const CardinalitySequence& c,
                                       std::size_t limit = kDefaultEnumerationLimit);

} // namespace cardmat
