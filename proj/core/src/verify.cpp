#include "cardmat/verify.hpp"

#include "cardmat/errors.hpp"
#include "cardmat/rng.hpp"

#include <chrono>

namespace cardmat {

InequalitySystem build_full_system(const MatroidInstance& m, const CardinalitySequence& c,
                                   bool include_fs, std::size_t limit) {
    c.require_pair();
    c.require_bound(m);
    const std::size_t n = m.size();
    if (n > limit)
        fail("size-limit-exceeded", "full system over " + std::to_string(n) +
                                        " elements exceeds limit " + std::to_string(limit));

    InequalitySystem sys(n);
    sys.add(lower_bound_ineq(n, c.front()));
    sys.add(upper_bound_ineq(n, c.back()));
    for (std::size_t e = 0; e < n; ++e) sys.add(nonneg_ineq(n, e));
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        Subset f(mask, n);
        // Non-closed rank inequalities are dominated and omitted.
        if (m.is_closed(f)) sys.add(build_rank_ineq(m, f));
        if (include_fs && c.gap_level(m.rank(f))) sys.add(build_fs(m, f, c));
    }
    return sys;
}

namespace {

std::vector<long> random_objective(Rng& rng, std::size_t n) {
    std::vector<long> w(n);
    for (auto& entry : w) entry = rng.integer(-10, 10);
    return w;
}

WeightVector to_weights(const std::vector<long>& w) {
    WeightVector out;
    out.reserve(w.size());
    for (long entry : w) out.emplace_back(entry);
    return out;
}

} // namespace

VerificationReport verify_completeness(const MatroidInstance& m, const CardinalitySequence& c,
                                       std::size_t trials, std::uint64_t seed,
                                       std::string instance_id, bool include_fs,
                                       std::size_t limit) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.instance_id = std::move(instance_id);
    report.trials = trials;
    report.seed = seed;

    auto vertices = enumerate_feasible(m, c, limit);
    auto sys = build_full_system(m, c, include_fs, limit);

    std::vector<Point> pts;
    pts.reserve(vertices.size());
    for (const auto& v : vertices) {
        Point p = incidence_vector(v);
        if (!sys.satisfied_by(p))
            fail("internal-error", "vertex " + v.str() + " violates the system");
        pts.push_back(std::move(p));
    }

    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        auto objective = random_objective(rng, m.size());
        WeightVector w = to_weights(objective);

        Rational best;
        bool first = true;
        for (const auto& p : pts) {
            Rational value = dot(w, p);
            if (first || value > best) best = value;
            first = false;
        }

        LpSolution lp = simplex_max(sys, w);
        if (lp.value != best)
            report.failures.push_back({t, objective, lp.value, best, lp.point});
    }

    report.passed = report.failures.empty();
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

void enumerate_common(const MatroidInstance& m1, const MatroidInstance& m2,
                      const CardinalitySequence& c, Subset current, std::size_t next,
                      std::vector<Subset>& out) {
    if (c.contains(current.count())) out.push_back(current);
    if (current.count() >= c.back()) return;
    for (std::size_t e = next; e < m1.size(); ++e) {
        Subset candidate = current.with(e);
        if (m1.is_independent(candidate) && m2.is_independent(candidate))
            enumerate_common(m1, m2, c, candidate, e + 1, out);
    }
}

} // namespace

IntersectionProbeReport probe_intersection_conjecture(const MatroidInstance& m1,
                                                      const MatroidInstance& m2,
                                                      const CardinalitySequence& c,
                                                      std::size_t trials, std::uint64_t seed,
                                                      std::size_t limit) {
    if (m1.size() != m2.size())
        fail("ground-set-mismatch", "the matroids must share one ground set");
    const std::size_t n = m1.size();
    if (n > limit)
        fail("size-limit-exceeded", "probe over " + std::to_string(n) +
                                        " elements exceeds limit " + std::to_string(limit));

    IntersectionProbeReport report;
    report.trials = trials;
    report.seed = seed;
    if (trials == 0) return report;

    std::vector<Subset> vertices;
    enumerate_common(m1, m2, c, Subset::empty_set(n), 0, vertices);
    if (vertices.empty())
        fail("infeasible", "no common independent set has a feasible cardinality");
    std::vector<Point> pts;
    pts.reserve(vertices.size());
    for (const auto& v : vertices) pts.push_back(incidence_vector(v));

    InequalitySystem sys = build_full_system(m1, c, true, limit);
    for (auto& row : build_full_system(m2, c, true, limit).rows) sys.add(std::move(row));

    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        auto objective = random_objective(rng, n);
        WeightVector w = to_weights(objective);

        Rational best;
        bool first = true;
        for (const auto& p : pts) {
            Rational value = dot(w, p);
            if (first || value > best) best = value;
            first = false;
        }

        LpSolution lp = simplex_max(sys, w);
        if (lp.value > best)
            report.candidates.push_back({t, objective, lp.value, best, lp.point});
    }
    return report;
}

} // namespace cardmat
