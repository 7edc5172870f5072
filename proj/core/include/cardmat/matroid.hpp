#pragma once

#include "cardmat/subset.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace cardmat {

inline constexpr std::size_t kDefaultBipartitionLimit = 20;

enum class MatroidKind {
    uniform,
    graphic,
    partition,
    linear_gf2,
    explicit_family,
    free_matroid,
    truncation,
    restriction,
};

std::string kind_name(MatroidKind kind);

/// A loopless matroid given by an independence oracle over a ground set of at
/// most 64 elements. Instances are immutable after construction; the rank
/// memo behaves as if rank were pure, so instances may be shared across
/// threads. Copies share the underlying representation (and memo).
///
/// Construction checks structural invariants only (index ranges, shapes);
/// looplessness and the matroid axioms of explicit families are checked by
/// validate().
class MatroidInstance {
public:
    static MatroidInstance uniform(std::size_t n, std::size_t k,
                                   std::vector<std::string> labels = {});
    static MatroidInstance graphic(std::size_t vertex_count,
                                   std::vector<std::pair<int, int>> edges,
                                   std::vector<std::string> labels = {});
    /// Blocks must be disjoint subsets of the ground set; elements not covered
    /// by any block are unconstrained. capacities[i] bounds |S ∩ blocks[i]|.
    static MatroidInstance partition(std::size_t n,
                                     std::vector<std::vector<int>> blocks,
                                     std::vector<std::size_t> capacities,
                                     std::vector<std::string> labels = {});
    /// One GF(2) column per element, given as bit strings; character i of a
    /// column is row i. All columns must have equal length (<= 64 rows).
    static MatroidInstance linear_gf2(std::vector<std::string> columns,
                                      std::vector<std::string> labels = {});
    /// Family stored as its maximal independent sets; independence is
    /// containment in some listed set (downward closure is inherent).
    static MatroidInstance explicit_family(std::size_t n,
                                           std::vector<std::vector<int>> maximal_independent,
                                           std::vector<std::string> labels = {});
    static MatroidInstance free_matroid(std::size_t n,
                                        std::vector<std::string> labels = {});

    const GroundSet& ground() const;
    std::size_t size() const; // |E|
    MatroidKind kind() const;

    Subset empty_subset() const { return Subset::empty_set(size()); }
    Subset full_subset() const { return Subset::full_set(size()); }

    /// Independence oracle; total on subsets of the ground set.
    bool is_independent(const Subset& s) const;

    /// r(f): size of a largest independent subset of f, computed greedily
    /// through the oracle and memoized.
    std::size_t rank(const Subset& f) const;
    std::size_t rank() const; // r(E)

    /// f together with every outside element whose addition keeps the rank.
    Subset closure(const Subset& f) const;
    bool is_closed(const Subset& f) const;

    /// No proper bipartition f = F1 ∪̇ F2 has r(F1)+r(F2) <= r(f). Singletons
    /// are vacuously inseparable. Enumerates 2^(|f|-1) splits; throws
    /// "size-limit-exceeded" beyond the limit.
    bool is_inseparable(const Subset& f,
                        std::size_t bipartition_limit = kDefaultBipartitionLimit) const;

    /// k-rank r^k(f) = k - r(E \ f); may be negative.
    long k_rank(const Subset& f, std::size_t k) const;

    /// No proper bipartition f = F1 ∪̇ F2 has r^k(F1)+r^k(F2) = r^k(f).
    bool is_k_inseparable(const Subset& f, std::size_t k,
                          std::size_t bipartition_limit = kDefaultBipartitionLimit) const;

    /// Matroid whose independent sets are those of *this with size <= k.
    MatroidInstance truncate(std::size_t k) const;

    /// Restriction to f, re-indexed to a ground set of size |f|; element i of
    /// the result is the i-th smallest member of f. Ranks agree with *this on
    /// subsets of f under that embedding.
    MatroidInstance restrict(const Subset& f) const;

    /// For restrictions: the original index of element i. Identity otherwise.
    std::size_t original_index(std::size_t i) const;

    /// Checks looplessness for every kind, and for explicit families that the
    /// stored sets are pairwise incomparable and that the family is a matroid
    /// (exhaustive rank-submodularity check for |E| <= 16, sampled greedy
    /// checks above). Throws "loop-found", "not-downward-closed" or
    /// "axiom-violation" with a witness.
    void validate() const;

private:
    struct Impl;
    explicit MatroidInstance(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

} // namespace cardmat
