#include "cardmat/separation.hpp"

#include "cardmat/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace cardmat {

namespace {

std::uint64_t bit(std::size_t e) { return std::uint64_t(1) << e; }

void check_point(const MatroidInstance& m, const Point& x) {
    if (x.size() != m.size())
        fail("dimension-mismatch", "one coordinate per ground-set element required");
    for (std::size_t e = 0; e < x.size(); ++e)
        if (x[e].sign() < 0)
            fail("negative-coordinate", "coordinate " + std::to_string(e) + " is negative");
}

struct BruteforceSearch {
    const MatroidInstance& m;
    const Point& x;
    Subset best;
    Rational best_value;

    BruteforceSearch(const MatroidInstance& m_, const Point& x_)
        : m(m_), x(x_), best(m_.empty_subset()), best_value(0) {}

    void consider(const Subset& f, const Rational& value) {
        if (value > best_value) {
            best = f;
            best_value = value;
            return;
        }
        if (value == best_value) {
            if (f.count() < best.count() ||
                (f.count() == best.count() && lex_less(f, best)))
                best = f;
        }
    }

    // DFS over elements; basis is the ascending-order greedy basis of current,
    // so |basis| = r(current) at the leaves without separate rank queries.
    void visit(std::size_t e, Subset current, Subset basis, Rational x_sum) {
        if (e == m.size()) {
            consider(current, x_sum - Rational(static_cast<long>(basis.count())));
            return;
        }
        visit(e + 1, current, basis, x_sum);
        Subset grown = basis.with(e);
        visit(e + 1, current.with(e), m.is_independent(grown) ? grown : basis, x_sum + x[e]);
    }
};

} // namespace

std::pair<Subset, Rational> separate_rank_bruteforce(const MatroidInstance& m, const Point& x,
                                                     std::size_t limit) {
    check_point(m, x);
    if (m.size() > limit)
        fail("size-limit-exceeded", "exhaustive separation over " + std::to_string(m.size()) +
                                        " elements exceeds limit " + std::to_string(limit));
    BruteforceSearch search(m, x);
    search.visit(0, m.empty_subset(), m.empty_subset(), Rational(0));
    return {search.best, search.best_value};
}

MinMaxCertificate separate_rank_augpath(const MatroidInstance& m, const Point& x) {
    check_point(m, x);
    const std::size_t n = m.size();

    // y as a convex combination of independent sets; map keyed by mask keeps
    // the decomposition deduplicated and deterministically ordered.
    std::map<std::uint64_t, Rational> members;
    members[0] = Rational(1);
    Point y(n, Rational(0));
    std::uint64_t reachable = 0;

    auto independent = [&](std::uint64_t mask) { return m.is_independent(Subset(mask, n)); };

    // Generous convergence guard; shortest augmenting paths terminate long
    // before this at the supported ground-set sizes.
    const std::size_t round_cap = 200000;
    for (std::size_t round = 0;; ++round) {
        if (round >= round_cap)
            fail("internal-error", "augmenting-path engine failed to converge");

        std::vector<std::pair<std::uint64_t, Rational>> mem(members.begin(), members.end());

        std::vector<int> parent_node(n, -1), parent_member(n, -1);
        std::vector<char> visited(n, 0);
        std::deque<std::size_t> queue;
        for (std::size_t e = 0; e < n; ++e) {
            if (y[e] < x[e]) {
                visited[e] = 1;
                queue.push_back(e);
            }
        }

        long absorb_node = -1, absorb_member = -1;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < mem.size(); ++i) {
                std::uint64_t mask = mem[i].first;
                if (mask & bit(u)) continue;
                if (independent(mask | bit(u))) {
                    absorb_node = static_cast<long>(u);
                    absorb_member = static_cast<long>(i);
                    break;
                }
            }
            if (absorb_node >= 0) break;
            // Exchange arcs u -> v: member i swaps u in and v out.
            for (std::size_t i = 0; i < mem.size(); ++i) {
                std::uint64_t mask = mem[i].first;
                if (mask & bit(u)) continue;
                std::uint64_t with_u = mask | bit(u);
                for (std::size_t v = 0; v < n; ++v) {
                    if (!(mask & bit(v)) || visited[v]) continue;
                    if (independent(with_u & ~bit(v))) {
                        visited[v] = 1;
                        parent_node[v] = static_cast<int>(u);
                        parent_member[v] = static_cast<int>(i);
                        queue.push_back(v);
                    }
                }
            }
        }

        if (absorb_node < 0) {
            for (std::size_t e = 0; e < n; ++e)
                if (visited[e]) reachable |= bit(e);
            break;
        }

        // Reconstruct source -> absorb_node and collect the member rewrites;
        // each rewrite acts on its own alpha-sized slice of the original
        // member, so repeated members on the path stay consistent.
        std::vector<std::pair<std::size_t, std::uint64_t>> ops; // (member, new mask)
        std::vector<std::size_t> usage(mem.size(), 0);
        ops.emplace_back(static_cast<std::size_t>(absorb_member),
                         mem[static_cast<std::size_t>(absorb_member)].first |
                             bit(static_cast<std::size_t>(absorb_node)));
        usage[static_cast<std::size_t>(absorb_member)] += 1;
        std::size_t v = static_cast<std::size_t>(absorb_node);
        while (parent_member[v] >= 0) {
            auto i = static_cast<std::size_t>(parent_member[v]);
            auto u = static_cast<std::size_t>(parent_node[v]);
            ops.emplace_back(i, (mem[i].first | bit(u)) & ~bit(v));
            usage[i] += 1;
            v = u;
        }
        const std::size_t source = v;

        Rational alpha = x[source] - y[source];
        for (std::size_t i = 0; i < mem.size(); ++i) {
            if (usage[i] == 0) continue;
            Rational share = mem[i].second / Rational(static_cast<long>(usage[i]));
            if (share < alpha) alpha = share;
        }

        for (const auto& [i, new_mask] : ops) {
            members[mem[i].first] -= alpha;
            members[new_mask] += alpha;
        }
        for (auto it = members.begin(); it != members.end();)
            it = it->second.is_zero() ? members.erase(it) : std::next(it);

        std::fill(y.begin(), y.end(), Rational(0));
        for (const auto& [mask, mass] : members)
            for (std::size_t e = 0; e < n; ++e)
                if (mask & bit(e)) y[e] += mass;
    }

    MinMaxCertificate cert;
    cert.y = y;
    cert.f_star = Subset(reachable, n);
    cert.value = sum(y);
    for (const auto& [mask, mass] : members)
        cert.decomposition.emplace_back(mass, Subset(mask, n));

    // Exact self-check of the min-max identity and the box constraint.
    Rational bound = Rational(static_cast<long>(m.rank(cert.f_star))) +
                     sum_over(x, cert.f_star.complement());
    if (cert.value != bound)
        fail("internal-error", "min-max certificate identity failed");
    for (std::size_t e = 0; e < n; ++e)
        if (y[e] > x[e]) fail("internal-error", "certificate exceeds the box");
    return cert;
}

namespace {

SeparationOutcome inside_outcome(std::optional<Rational> delta = std::nullopt) {
    SeparationOutcome out;
    out.status = SeparationOutcome::Status::inside;
    out.delta = std::move(delta);
    return out;
}

SeparationOutcome violated_outcome(LinearInequality cut, Subset witness, Rational violation,
                                   std::optional<Rational> delta = std::nullopt) {
    SeparationOutcome out;
    out.status = SeparationOutcome::Status::violated;
    out.cut = std::move(cut);
    out.witness = std::move(witness);
    out.violation = std::move(violation);
    out.delta = std::move(delta);
    return out;
}

// Grötschel's routine on the free matroid: per forbidden size k, the best
// candidate is the set of the k greatest coordinates.
SeparationOutcome separate_fs_fast_free(const MatroidInstance& m, const Point& x,
                                        const CardinalitySequence& c, std::size_t level,
                                        Rational delta) {
    const std::size_t n = m.size();
    const std::size_t c_p = c[level];
    const std::size_t c_next = c[level + 1];

    std::vector<std::size_t> order(n);
    for (std::size_t e = 0; e < n; ++e) order[e] = e;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });

    std::optional<Subset> best;
    Rational best_violation;
    for (std::size_t k = c_p + 1; k < c_next; ++k) {
        Subset f = m.empty_subset();
        for (std::size_t i = 0; i < k; ++i) f = f.with(order[i]);
        auto fc = fs_coefficients(c_p, c_next, k);
        Rational violation = Rational(fc.inside) * sum_over(x, f) +
                             Rational(fc.outside) * sum_over(x, f.complement()) -
                             Rational(fc.rhs);
        if (!best || violation > best_violation ||
            (violation == best_violation && lex_less(f, *best))) {
            best = f;
            best_violation = violation;
        }
    }
    if (!best || best_violation.sign() <= 0) return inside_outcome(delta);
    return violated_outcome(build_fs(m, *best, c), *best, best_violation, delta);
}

} // namespace

SeparationOutcome separate_fs(const MatroidInstance& m, const Point& x,
                              const CardinalitySequence& c, FsEngine engine,
                              bool check_rank_precondition) {
    check_point(m, x);
    c.require_pair();

    if (check_rank_precondition) {
        auto cert = separate_rank_augpath(m, x);
        if (sum(x) > cert.value)
            fail("rank-inequality-violated",
                 "point violates the rank inequality of " + cert.f_star.str());
    }

    Rational total = sum(x);
    // On a feasible cardinality or outside the bounds no forbidden-set cut
    // can be violated for a point satisfying the rank inequalities.
    std::optional<std::size_t> level;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        if (total == Rational(static_cast<long>(c[i]))) return inside_outcome();
        if (Rational(static_cast<long>(c[i])) < total &&
            total < Rational(static_cast<long>(c[i + 1]))) {
            level = i;
            break;
        }
    }
    if (total == Rational(static_cast<long>(c.back()))) return inside_outcome();
    if (!level) return inside_outcome();

    const std::size_t c_p = c[*level];
    const std::size_t c_next = c[*level + 1];
    Rational width(static_cast<long>(c_next - c_p));
    Rational delta = (total - Rational(static_cast<long>(c_p))) / width;

    if (engine == FsEngine::fast_free ||
        (engine == FsEngine::automatic && m.kind() == MatroidKind::free_matroid)) {
        if (m.kind() != MatroidKind::free_matroid)
            fail("invalid-instance", "fast path requires the free matroid");
        return separate_fs_fast_free(m, x, c, *level, delta);
    }

    // Scale to x' = x/delta and separate the rank inequalities there: the cut
    // threshold becomes c_p (1-delta)/delta.
    Point scaled(x.size());
    for (std::size_t e = 0; e < x.size(); ++e) scaled[e] = x[e] / delta;
    auto cert = separate_rank_augpath(m, scaled);
    Rational max_gap = sum(scaled) - cert.value; // max_F x'(F) - r(F)
    Rational threshold = Rational(static_cast<long>(c_p)) * (Rational(1) - delta) / delta;
    if (max_gap <= threshold) return inside_outcome(delta);

    const Subset& f = cert.f_star;
    const std::size_t rho = m.rank(f);
    if (!(c_p < rho && rho < c_next))
        fail("internal-error", "scaled maximizer escaped the forbidden rank range");
    LinearInequality cut = build_fs(m, f, c);
    Rational violation = cut.violation_at(x);
    if (violation.sign() <= 0) fail("internal-error", "scaled maximizer yields no violation");
    return violated_outcome(std::move(cut), f, std::move(violation), delta);
}

SeparationOutcome separate_point(const MatroidInstance& m, const Point& x,
                                 const CardinalitySequence& c) {
    if (x.size() != m.size())
        fail("dimension-mismatch", "one coordinate per ground-set element required");
    c.require_pair();
    const std::size_t n = m.size();

    for (std::size_t e = 0; e < n; ++e) {
        if (x[e].sign() < 0)
            return violated_outcome(nonneg_ineq(n, e), Subset::single(e, n), -x[e]);
    }
    Rational total = sum(x);
    if (total < Rational(static_cast<long>(c.front())))
        return violated_outcome(lower_bound_ineq(n, c.front()), m.full_subset(),
                                Rational(static_cast<long>(c.front())) - total);
    if (total > Rational(static_cast<long>(c.back())))
        return violated_outcome(upper_bound_ineq(n, c.back()), m.full_subset(),
                                total - Rational(static_cast<long>(c.back())));

    auto cert = separate_rank_augpath(m, x);
    Rational rank_gap = total - cert.value; // max_F x(F) - r(F)
    if (rank_gap.sign() > 0)
        return violated_outcome(build_rank_ineq(m, cert.f_star), cert.f_star, rank_gap);

    auto fs = separate_fs(m, x, c, FsEngine::automatic, /*check_rank_precondition=*/false);
    if (fs.violated()) return fs;

    SeparationOutcome inside = inside_outcome(fs.delta);
    inside.certificate = std::move(cert);
    return inside;
}

} // namespace cardmat
