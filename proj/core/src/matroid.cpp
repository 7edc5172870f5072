#include "cardmat/matroid.hpp"

#include "cardmat/errors.hpp"
#include "cardmat/rng.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace cardmat {

std::string kind_name(MatroidKind kind) {
    switch (kind) {
        case MatroidKind::uniform: return "uniform";
        case MatroidKind::graphic: return "graphic";
        case MatroidKind::partition: return "partition";
        case MatroidKind::linear_gf2: return "linear_gf2";
        case MatroidKind::explicit_family: return "explicit";
        case MatroidKind::free_matroid: return "free";
        case MatroidKind::truncation: return "truncation";
        case MatroidKind::restriction: return "restriction";
    }
    return "?";
}

namespace {

// Union-find over vertices, rebuilt per graphic independence query.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

std::uint64_t bit(std::size_t e) { return std::uint64_t(1) << e; }

} // namespace

struct MatroidInstance::Impl {
    GroundSet ground;
    MatroidKind kind;

    std::size_t k = 0;                          // uniform / truncation
    std::size_t vertex_count = 0;               // graphic
    std::vector<std::pair<int, int>> edges;     // graphic
    std::vector<std::uint64_t> block_masks;     // partition
    std::vector<std::size_t> capacities;        // partition
    std::vector<std::uint64_t> columns;         // linear_gf2, bit i = row i
    std::vector<std::uint64_t> maximal_masks;   // explicit family
    std::shared_ptr<const Impl> base;           // truncation / restriction
    std::vector<std::size_t> embed;             // restriction: new -> old index

    mutable std::mutex cache_mutex;
    mutable std::unordered_map<std::uint64_t, std::uint32_t> rank_cache;

    explicit Impl(GroundSet g, MatroidKind kd) : ground(std::move(g)), kind(kd) {}

    std::size_t n() const { return ground.size(); }

    std::uint64_t embed_bits(std::uint64_t mask) const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < embed.size(); ++i)
            if (mask & bit(i)) out |= bit(embed[i]);
        return out;
    }

    bool independent(std::uint64_t mask) const {
        switch (kind) {
            case MatroidKind::free_matroid:
                return true;
            case MatroidKind::uniform:
                return static_cast<std::size_t>(__builtin_popcountll(mask)) <= k;
            case MatroidKind::graphic: {
                UnionFind uf(vertex_count);
                for (std::size_t e = 0; e < edges.size(); ++e) {
                    if (!(mask & bit(e))) continue;
                    if (!uf.unite(static_cast<std::size_t>(edges[e].first),
                                  static_cast<std::size_t>(edges[e].second)))
                        return false; // closes a cycle
                }
                return true;
            }
            case MatroidKind::partition:
                for (std::size_t b = 0; b < block_masks.size(); ++b)
                    if (static_cast<std::size_t>(__builtin_popcountll(mask & block_masks[b])) >
                        capacities[b])
                        return false;
                return true;
            case MatroidKind::linear_gf2: {
                std::vector<std::uint64_t> basis;
                for (std::size_t e = 0; e < columns.size(); ++e) {
                    if (!(mask & bit(e))) continue;
                    std::uint64_t v = columns[e];
                    for (std::uint64_t b : basis) v = std::min(v, v ^ b);
                    if (v == 0) return false;
                    basis.push_back(v);
                }
                return true;
            }
            case MatroidKind::explicit_family:
                for (std::uint64_t maximal : maximal_masks)
                    if ((mask & ~maximal) == 0) return true;
                return false;
            case MatroidKind::truncation:
                return static_cast<std::size_t>(__builtin_popcountll(mask)) <= k &&
                       base->independent(mask);
            case MatroidKind::restriction:
                return base->independent(embed_bits(mask));
        }
        return false;
    }

    std::size_t rank_of(std::uint64_t mask) const {
        // Truncation and restriction delegate, sharing the base's memo.
        if (kind == MatroidKind::truncation) return std::min(base->rank_of(mask), k);
        if (kind == MatroidKind::restriction) return base->rank_of(embed_bits(mask));
        if (kind == MatroidKind::free_matroid || kind == MatroidKind::uniform) {
            std::size_t c = static_cast<std::size_t>(__builtin_popcountll(mask));
            return kind == MatroidKind::free_matroid ? c : std::min(c, k);
        }
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = rank_cache.find(mask);
            if (it != rank_cache.end()) return it->second;
        }
        // Greedy through the oracle in ascending element order; correct on
        // matroids independently of the order.
        std::uint64_t basis = 0;
        for (std::size_t e = 0; e < n(); ++e) {
            if (!(mask & bit(e))) continue;
            if (independent(basis | bit(e))) basis |= bit(e);
        }
        auto r = static_cast<std::size_t>(__builtin_popcountll(basis));
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            rank_cache.emplace(mask, static_cast<std::uint32_t>(r));
        }
        return r;
    }
};

namespace {

void check_subset(const MatroidInstance& m, const Subset& s) {
    if (s.universe_size() != m.size())
        fail("ground-set-mismatch", "subset universe does not match the instance");
}

} // namespace

MatroidInstance MatroidInstance::uniform(std::size_t n, std::size_t k,
                                         std::vector<std::string> labels) {
    auto impl = std::make_shared<Impl>(GroundSet(n, std::move(labels)), MatroidKind::uniform);
    impl->k = k;
    return MatroidInstance(std::move(impl));
}

MatroidInstance MatroidInstance::graphic(std::size_t vertex_count,
                                         std::vector<std::pair<int, int>> edges,
                                         std::vector<std::string> labels) {
    if (vertex_count == 0) fail("invalid-instance", "graphic matroid needs vertices");
    for (const auto& [u, v] : edges)
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count ||
            static_cast<std::size_t>(v) >= vertex_count)
            fail("invalid-instance", "edge endpoint out of range");
    auto impl =
        std::make_shared<Impl>(GroundSet(edges.size(), std::move(labels)), MatroidKind::graphic);
    impl->vertex_count = vertex_count;
    impl->edges = std::move(edges);
    return MatroidInstance(std::move(impl));
}

MatroidInstance MatroidInstance::partition(std::size_t n, std::vector<std::vector<int>> blocks,
                                           std::vector<std::size_t> capacities,
                                           std::vector<std::string> labels) {
    if (blocks.size() != capacities.size())
        fail("invalid-instance", "one capacity per block required");
    auto impl =
        std::make_shared<Impl>(GroundSet(n, std::move(labels)), MatroidKind::partition);
    std::uint64_t covered = 0;
    for (const auto& block : blocks) {
        std::uint64_t mask = Subset::from_indices(block, n).bits();
        if (mask & covered) fail("invalid-instance", "partition blocks must be disjoint");
        covered |= mask;
        impl->block_masks.push_back(mask);
    }
    impl->capacities = std::move(capacities);
    return MatroidInstance(std::move(impl));
}

MatroidInstance MatroidInstance::linear_gf2(std::vector<std::string> columns,
                                            std::vector<std::string> labels) {
    if (columns.empty()) fail("invalid-instance", "linear_gf2 needs at least one column");
    std::size_t rows = columns.front().size();
    if (rows == 0 || rows > 64) fail("invalid-instance", "column length must be in 1..64");
    auto impl = std::make_shared<Impl>(GroundSet(columns.size(), std::move(labels)),
                                       MatroidKind::linear_gf2);
    for (const auto& col : columns) {
        if (col.size() != rows) fail("invalid-instance", "columns must have equal length");
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (col[i] == '1') v |= bit(i);
            else if (col[i] != '0') fail("invalid-instance", "columns must be bit strings");
        }
        impl->columns.push_back(v);
    }
    return MatroidInstance(std::move(impl));
}

MatroidInstance MatroidInstance::explicit_family(std::size_t n,
                                                 std::vector<std::vector<int>> maximal_independent,
                                                 std::vector<std::string> labels) {
    auto impl = std::make_shared<Impl>(GroundSet(n, std::move(labels)),
                                       MatroidKind::explicit_family);
    for (const auto& s : maximal_independent)
        impl->maximal_masks.push_back(Subset::from_indices(s, n).bits());
    if (impl->maximal_masks.empty()) impl->maximal_masks.push_back(0); // family {∅}
    return MatroidInstance(std::move(impl));
}

MatroidInstance MatroidInstance::free_matroid(std::size_t n, std::vector<std::string> labels) {
    return MatroidInstance(
        std::make_shared<Impl>(GroundSet(n, std::move(labels)), MatroidKind::free_matroid));
}

const GroundSet& MatroidInstance::ground() const { return impl_->ground; }
std::size_t MatroidInstance::size() const { return impl_->n(); }
MatroidKind MatroidInstance::kind() const { return impl_->kind; }

bool MatroidInstance::is_independent(const Subset& s) const {
    check_subset(*this, s);
    return impl_->independent(s.bits());
}

std::size_t MatroidInstance::rank(const Subset& f) const {
    check_subset(*this, f);
    return impl_->rank_of(f.bits());
}

std::size_t MatroidInstance::rank() const { return impl_->rank_of(full_subset().bits()); }

Subset MatroidInstance::closure(const Subset& f) const {
    check_subset(*this, f);
    std::size_t r = rank(f);
    Subset out = f;
    for (std::size_t e = 0; e < size(); ++e) {
        if (f.contains(e)) continue;
        if (rank(f.with(e)) == r) out = out.with(e);
    }
    return out;
}

bool MatroidInstance::is_closed(const Subset& f) const { return closure(f) == f; }

bool MatroidInstance::is_inseparable(const Subset& f, std::size_t bipartition_limit) const {
    check_subset(*this, f);
    if (f.empty()) fail("empty-set", "inseparability of the empty set is undefined");
    auto elems = f.indices();
    std::size_t t = elems.size();
    if (t == 1) return true;
    if (t > bipartition_limit)
        fail("size-limit-exceeded",
             "bipartition enumeration over " + std::to_string(t) + " elements exceeds limit " +
                 std::to_string(bipartition_limit));
    std::size_t rf = rank(f);
    // Unordered proper splits: elems[0] stays on side one.
    std::uint64_t splits = std::uint64_t(1) << (t - 1);
    for (std::uint64_t s = 0; s + 1 < splits; ++s) {
        Subset f1 = Subset::single(static_cast<std::size_t>(elems[0]), size());
        Subset f2 = empty_subset();
        for (std::size_t i = 1; i < t; ++i) {
            if (s & bit(i - 1)) f1 = f1.with(static_cast<std::size_t>(elems[i]));
            else f2 = f2.with(static_cast<std::size_t>(elems[i]));
        }
        if (rank(f1) + rank(f2) <= rf) return false;
    }
    return true;
}

long MatroidInstance::k_rank(const Subset& f, std::size_t k) const {
    check_subset(*this, f);
    return static_cast<long>(k) - static_cast<long>(rank(f.complement()));
}

bool MatroidInstance::is_k_inseparable(const Subset& f, std::size_t k,
                                       std::size_t bipartition_limit) const {
    check_subset(*this, f);
    if (f.empty()) fail("empty-set", "k-inseparability of the empty set is undefined");
    auto elems = f.indices();
    std::size_t t = elems.size();
    if (t == 1) return true;
    if (t > bipartition_limit)
        fail("size-limit-exceeded",
             "bipartition enumeration over " + std::to_string(t) + " elements exceeds limit " +
                 std::to_string(bipartition_limit));
    long rkf = k_rank(f, k);
    std::uint64_t splits = std::uint64_t(1) << (t - 1);
    for (std::uint64_t s = 0; s + 1 < splits; ++s) {
        Subset f1 = Subset::single(static_cast<std::size_t>(elems[0]), size());
        Subset f2 = empty_subset();
        for (std::size_t i = 1; i < t; ++i) {
            if (s & bit(i - 1)) f1 = f1.with(static_cast<std::size_t>(elems[i]));
            else f2 = f2.with(static_cast<std::size_t>(elems[i]));
        }
        if (k_rank(f1, k) + k_rank(f2, k) == rkf) return false;
    }
    return true;
}

MatroidInstance MatroidInstance::truncate(std::size_t k) const {
    auto impl = std::make_shared<Impl>(impl_->ground, MatroidKind::truncation);
    impl->k = k;
    impl->base = impl_;
    return MatroidInstance(std::move(impl));
}

MatroidInstance MatroidInstance::restrict(const Subset& f) const {
    check_subset(*this, f);
    if (f.empty()) fail("empty-set", "restriction to the empty set is undefined");
    auto idx = f.indices();
    std::vector<std::string> labels;
    if (!impl_->ground.labels().empty())
        for (int e : idx) labels.push_back(impl_->ground.labels()[static_cast<std::size_t>(e)]);
    auto impl = std::make_shared<Impl>(GroundSet(idx.size(), std::move(labels)),
                                       MatroidKind::restriction);
    impl->base = impl_;
    impl->embed.assign(idx.begin(), idx.end());
    return MatroidInstance(std::move(impl));
}

std::size_t MatroidInstance::original_index(std::size_t i) const {
    if (impl_->kind == MatroidKind::restriction) return impl_->embed.at(i);
    return i;
}

namespace {

// Maximum independent-subset size of every subset, by subset DP; well defined
// for any independence system.
std::vector<std::uint32_t> subset_rank_table(const MatroidInstance& m) {
    std::size_t n = m.size();
    std::vector<std::uint32_t> b(std::size_t(1) << n, 0);
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        if (m.is_independent(Subset(mask, n))) {
            b[mask] = static_cast<std::uint32_t>(__builtin_popcountll(mask));
            continue;
        }
        std::uint32_t best = 0;
        std::uint64_t rest = mask;
        while (rest) {
            std::uint64_t low = rest & (~rest + 1);
            best = std::max(best, b[mask ^ low]);
            rest ^= low;
        }
        b[mask] = best;
    }
    return b;
}

std::size_t greedy_size(const MatroidInstance& m, std::uint64_t mask,
                        const std::vector<std::size_t>& order) {
    std::uint64_t cur = 0;
    for (std::size_t e : order) {
        if (!(mask & bit(e))) continue;
        if (m.is_independent(Subset(cur | bit(e), m.size()))) cur |= bit(e);
    }
    return static_cast<std::size_t>(__builtin_popcountll(cur));
}

} // namespace

void MatroidInstance::validate() const {
    const Impl& impl = *impl_;
    std::size_t n = size();
    for (std::size_t e = 0; e < n; ++e)
        if (!impl.independent(bit(e)))
            fail("loop-found", "element " + std::to_string(e) + " is a loop");
    if (impl.kind != MatroidKind::explicit_family) return;

    for (std::size_t i = 0; i < impl.maximal_masks.size(); ++i)
        for (std::size_t j = 0; j < impl.maximal_masks.size(); ++j) {
            if (i == j) continue;
            if ((impl.maximal_masks[i] & ~impl.maximal_masks[j]) == 0)
                fail("not-downward-closed",
                     "listed set " + Subset(impl.maximal_masks[i], n).str() +
                         " is contained in " + Subset(impl.maximal_masks[j], n).str() +
                         " and is not maximal");
        }

    if (n <= 16) {
        // Exhaustive: an independence system is a matroid iff its subset rank
        // function is submodular; locally checked via diminishing returns.
        auto b = subset_rank_table(*this);
        std::vector<std::size_t> up_order(n), down_order(n);
        std::iota(up_order.begin(), up_order.end(), 0);
        std::iota(down_order.begin(), down_order.end(), 0);
        std::reverse(down_order.begin(), down_order.end());
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            for (std::size_t e = 0; e < n; ++e) {
                if (mask & bit(e)) continue;
                for (std::size_t f = e + 1; f < n; ++f) {
                    if (mask & bit(f)) continue;
                    if (b[mask | bit(e)] + b[mask | bit(f)] <
                        b[mask] + b[mask | bit(e) | bit(f)]) {
                        std::uint64_t witness = mask | bit(e) | bit(f);
                        std::size_t up = greedy_size(*this, witness, up_order);
                        std::size_t down = greedy_size(*this, witness, down_order);
                        std::size_t lo = std::min({up, down, static_cast<std::size_t>(b[witness])});
                        fail("axiom-violation",
                             "subset " + Subset(witness, n).str() +
                                 " has bases of unequal cardinality (" + std::to_string(lo) +
                                 " vs " + std::to_string(b[witness]) + ")");
                    }
                }
            }
        }
    } else {
        // Sampled: maximal independent subsets built in different orders must
        // agree in size on every subset.
        Rng rng(0x9e3779b97f4a7c15ULL);
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t trial = 0; trial < 2000; ++trial) {
            std::uint64_t mask = rng.bits() & (n >= 64 ? ~std::uint64_t(0)
                                                       : ((std::uint64_t(1) << n) - 1));
            std::size_t up = greedy_size(*this, mask, order);
            for (int shuffle = 0; shuffle < 3; ++shuffle) {
                auto perm = order;
                for (std::size_t i = n; i > 1; --i)
                    std::swap(perm[i - 1], perm[rng.below(i)]);
                if (greedy_size(*this, mask, perm) != up)
                    fail("axiom-violation", "subset " + Subset(mask, n).str() +
                                                " has bases of unequal cardinality");
            }
        }
    }
}

} // namespace cardmat
