#include "cardmat/cardinality.hpp"

#include "cardmat/errors.hpp"

#include <algorithm>

namespace cardmat {

CardinalitySequence::CardinalitySequence(std::vector<std::size_t> values)
    : values_(std::move(values)) {
    if (values_.empty()) fail("invalid-instance", "cardinality sequence must be nonempty");
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i - 1] >= values_[i])
            fail("invalid-instance", "cardinality sequence must be strictly increasing");
}

CardinalitySequence CardinalitySequence::single(std::size_t k) {
    return CardinalitySequence(std::vector<std::size_t>{k});
}

bool CardinalitySequence::contains(std::size_t k) const {
    return std::binary_search(values_.begin(), values_.end(), k);
}

std::optional<std::size_t> CardinalitySequence::gap_level(std::size_t rho) const {
    for (std::size_t i = 0; i + 1 < values_.size(); ++i)
        if (values_[i] < rho && rho < values_[i + 1]) return i;
    return std::nullopt;
}

void CardinalitySequence::require_pair() const {
    if (values_.size() < 2)
        fail("sequence-too-short", "at least two feasible cardinalities required");
}

void CardinalitySequence::require_bound(const MatroidInstance& m) const {
    if (back() > m.rank())
        fail("cardinality-out-of-range",
             "largest cardinality " + std::to_string(back()) + " exceeds the rank " +
                 std::to_string(m.rank()));
}

std::optional<GreedyResult> greedy_fixed_cardinality(const MatroidInstance& m,
                                                     const WeightVector& w, std::size_t k) {
    if (w.size() != m.size()) fail("dimension-mismatch", "one weight per element required");
    if (k > m.rank()) return std::nullopt;

    std::vector<std::size_t> order(m.size());
    for (std::size_t e = 0; e < m.size(); ++e) order[e] = e;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });

    Subset picked = m.empty_subset();
    Rational value;
    for (std::size_t e : order) {
        if (picked.count() == k) break;
        Subset candidate = picked.with(e);
        if (m.is_independent(candidate)) {
            picked = candidate;
            value += w[e];
        }
    }
    return GreedyResult{picked, value};
}

GreedyResult optimize_chs(const MatroidInstance& m, const WeightVector& w,
                          const CardinalitySequence& c) {
    c.require_pair();
    std::optional<GreedyResult> best;
    for (std::size_t p = 0; p < c.size(); ++p) {
        auto result = greedy_fixed_cardinality(m, w, c[p]);
        if (!result) continue; // infeasible cardinality, skipped
        if (!best || result->value > best->value) best = result;
    }
    if (!best) fail("infeasible", "no feasible cardinality in the sequence");
    return *best;
}

namespace {

void enumerate_recurse(const MatroidInstance& m, const CardinalitySequence& c,
                       Subset current, std::size_t next, std::vector<Subset>& out) {
    if (c.contains(current.count())) out.push_back(current);
    if (current.count() >= c.back()) return;
    for (std::size_t e = next; e < m.size(); ++e) {
        Subset candidate = current.with(e);
        if (m.is_independent(candidate)) enumerate_recurse(m, c, candidate, e + 1, out);
    }
}

} // namespace

std::vector<Subset> enumerate_feasible(const MatroidInstance& m, const CardinalitySequence& c,
                                       std::size_t limit) {
    if (m.size() > limit)
        fail("size-limit-exceeded", "enumeration over " + std::to_string(m.size()) +
                                        " elements exceeds limit " + std::to_string(limit));
    std::vector<Subset> out;
    // Depth-first extension visits independent sets in lexicographic order of
    // their index sequences; a stable sort by size keeps that order per size.
    enumerate_recurse(m, c, m.empty_subset(), 0, out);
    std::stable_sort(out.begin(), out.end(),
                     [](const Subset& a, const Subset& b) { return a.count() < b.count(); });
    return out;
}

} // namespace cardmat
