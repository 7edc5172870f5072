#include "cardmat/facets.hpp"

#include "cardmat/affine.hpp"
#include "cardmat/errors.hpp"

namespace cardmat {

namespace {

std::vector<Point> vertex_points(const MatroidInstance& m, const CardinalitySequence& c,
                                 std::size_t limit, std::vector<Subset>* sets = nullptr) {
    auto vertices = enumerate_feasible(m, c, limit);
    if (vertices.empty())
        fail("infeasible", "no independent set has a feasible cardinality");
    std::vector<Point> pts;
    pts.reserve(vertices.size());
    for (const auto& v : vertices) pts.push_back(incidence_vector(v));
    if (sets) *sets = std::move(vertices);
    return pts;
}

} // namespace

FacetVerdict facet_oracle(const MatroidInstance& m, const CardinalitySequence& c,
                          const LinearInequality& ineq, std::size_t limit) {
    if (ineq.dimension() != m.size())
        fail("dimension-mismatch", "inequality dimension does not match the ground set");
    std::vector<Subset> vertices;
    auto pts = vertex_points(m, c, limit, &vertices);

    FacetVerdict verdict;
    verdict.dim_polytope = affine_rank(pts) - 1;

    std::vector<Point> tight_pts;
    std::vector<Subset> tight_sets;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!ineq.satisfied_by(pts[i]))
            fail("not-valid", "inequality is violated by vertex " + vertices[i].str());
        if (ineq.tight_at(pts[i])) {
            tight_pts.push_back(pts[i]);
            tight_sets.push_back(vertices[i]);
        }
    }

    if (tight_pts.empty()) {
        verdict.dim_face = -1;
        verdict.is_facet = false;
        return verdict;
    }
    auto basis = affine_basis_indices(tight_pts);
    verdict.dim_face = static_cast<long>(basis.size()) - 1;
    for (std::size_t i : basis) verdict.witness.push_back(tight_sets[i]);
    verdict.is_facet = verdict.dim_face == static_cast<long>(verdict.dim_polytope) - 1;
    return verdict;
}

std::size_t polytope_dimension(const MatroidInstance& m, const CardinalitySequence& c,
                               std::size_t limit) {
    return affine_rank(vertex_points(m, c, limit)) - 1;
}

bool rank_facet_verdict(const MatroidInstance& m, const Subset& f, const CardinalitySequence& c,
                        std::size_t bipartition_limit) {
    if (f.universe_size() != m.size())
        fail("ground-set-mismatch", "subset universe does not match the instance");
    if (f.empty()) fail("empty-set", "rank inequality of the empty set is undefined");
    c.require_pair();

    const std::size_t r_f = m.rank(f);
    const std::size_t r_e = m.rank();
    const std::size_t c_m1 = c[c.size() - 2]; // c_{m-1}
    const std::size_t c_m = c.back();
    const Subset everything = m.full_subset();

    auto closed_and_inseparable = [&] {
        return m.is_closed(f) && m.is_inseparable(f, bipartition_limit);
    };

    // (i) rank strictly below the second-largest cardinality
    if (0 < r_f && r_f < c_m1 && closed_and_inseparable()) return true;
    // (ii) rank equal to c_{m-1}, c_m below the full rank
    if (0 < c_m1 && c_m1 == r_f && c_m < r_e && closed_and_inseparable()) return true;
    // (iii) rank equal to c_{m-1}, c_m equal to the full rank
    if (0 < c_m1 && c_m1 == r_f && r_f < c_m && c_m == r_e && closed_and_inseparable() &&
        m.is_k_inseparable(f.complement(), c_m, bipartition_limit) &&
        m.is_inseparable(everything, bipartition_limit))
        return true;
    // (iv) the upper cardinality bound x(E) <= c_m
    if (0 < c_m1 && c_m1 < c_m && c_m == r_f && f == everything &&
        (c_m < r_e || m.is_inseparable(everything, bipartition_limit)))
        return true;
    // (v) c = (0, r(E)): modular complementary pairs
    if (c_m1 == 0 && c.front() == 0 && c_m == r_e &&
        r_f + m.rank(f.complement()) == r_e)
        return true;
    return false;
}

FsFacetVerdict fs_facet_verdict(const MatroidInstance& m, const Subset& f,
                                const CardinalitySequence& c, std::size_t bipartition_limit,
                                std::size_t enumeration_limit) {
    if (f.universe_size() != m.size())
        fail("ground-set-mismatch", "subset universe does not match the instance");
    c.require_pair();
    const std::size_t r_f = m.rank(f);
    auto level = c.gap_level(r_f);
    if (!level)
        fail("feasible-rank", "rank " + std::to_string(r_f) +
                                  " does not lie strictly between consecutive cardinalities");
    const std::size_t c_p = c[*level];
    const std::size_t c_next = c[*level + 1];
    const std::size_t r_e = m.rank();
    const Subset complement = f.complement();

    FsFacetVerdict verdict;
    if (c_p == 0) {
        // The cut is facet-defining iff x(F) <= r(F) is facet-defining for the
        // single-cardinality polytope at c_{p+1}.
        verdict.clause = 'a';
        bool dim_hypothesis =
            c_next < r_e || m.is_inseparable(m.full_subset(), bipartition_limit);
        if (dim_hypothesis) {
            verdict.is_facet = m.is_closed(f) && m.is_inseparable(f, bipartition_limit) &&
                               r_f < c_next &&
                               (c_next < r_e ||
                                m.is_k_inseparable(complement, c_next, bipartition_limit));
        } else {
            verdict.used_enumeration_fallback = true;
            verdict.is_facet = facet_oracle(m, CardinalitySequence::single(c_next),
                                            build_rank_ineq(m, f), enumeration_limit)
                                   .is_facet;
        }
        return verdict;
    }

    verdict.clause = 'b';
    verdict.is_facet =
        m.is_closed(f) &&
        (c_next < r_e || m.is_k_inseparable(complement, c_next, bipartition_limit));
    return verdict;
}

SingleKVerdict single_k_predicates(const MatroidInstance& m, const std::optional<Subset>& f,
                                   std::size_t k, std::size_t bipartition_limit) {
    const std::size_t r_e = m.rank();
    if (k == 0 || k > r_e)
        fail("cardinality-out-of-range", "k must satisfy 0 < k <= r(E)");

    SingleKVerdict verdict;
    verdict.k = k;
    verdict.full_dimension = k < r_e || m.is_inseparable(m.full_subset(), bipartition_limit);
    if (!f || !verdict.full_dimension) return verdict;

    if (f->universe_size() != m.size())
        fail("ground-set-mismatch", "subset universe does not match the instance");
    if (f->empty()) fail("empty-set", "rank inequality of the empty set is undefined");
    if (*f == m.full_subset()) {
        // x(E) <= r(E) is an implicit equation (k = r(E)) or face-empty (k < r(E)).
        verdict.rank_ineq_facet = false;
        return verdict;
    }
    const std::size_t r_f = m.rank(*f);
    if (r_f > k) {
        verdict.rank_ineq_facet = false; // x(F) <= x(E) = k < r(F): empty face
    } else if (r_f == k) {
        // Tightness forces x(E\F) = 0, so the face is the basis polytope of
        // the restriction to F: a facet exactly when only one coordinate is
        // pinned and that polytope spans |F|-1 dimensions.
        verdict.rank_ineq_facet =
            f->complement().count() == 1 && m.is_inseparable(*f, bipartition_limit);
    } else {
        verdict.rank_ineq_facet =
            m.is_closed(*f) && m.is_inseparable(*f, bipartition_limit) &&
            (k < r_e || m.is_k_inseparable(f->complement(), k, bipartition_limit));
    }
    return verdict;
}

} // namespace cardmat
