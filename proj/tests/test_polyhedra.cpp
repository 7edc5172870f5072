#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cardmat/affine.hpp"
#include "cardmat/errors.hpp"
#include "cardmat/facets.hpp"
#include "cardmat/inequality.hpp"
#include "support/catalog.hpp"

using namespace cardmat;
using namespace cardmat::testing;

namespace {

Subset set_of(const MatroidInstance& m, std::initializer_list<int> elems) {
    return Subset::from_indices(std::vector<int>(elems), m.size());
}

Point pt(std::initializer_list<long> values) {
    Point p;
    for (long v : values) p.emplace_back(v);
    return p;
}

// Rows of the tight-set matrix of x(F) >= r^k(F), restricted to F.
std::vector<std::vector<Rational>> tight_matrix_columns_f(const MatroidInstance& m,
                                                          const Subset& f, std::size_t k) {
    std::vector<std::vector<Rational>> rows;
    const std::size_t n = m.size();
    long target = m.k_rank(f, k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        Subset s(mask, n);
        if (s.count() != k || !m.is_independent(s)) continue;
        if (static_cast<long>((s & f).count()) != target) continue;
        std::vector<Rational> row;
        for (int e : f.indices()) row.emplace_back(s.contains(static_cast<std::size_t>(e)) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

TEST_CASE("fs_coefficients reproduces the worked figure") {
    auto fc = fs_coefficients(5, 12, 9);
    CHECK(fc.inside == 3);
    CHECK(fc.outside == -4);
    CHECK(fc.rhs == 15);

    auto a = fs_coefficients(1, 3, 2);
    CHECK(a.inside == 1);
    CHECK(a.outside == -1);
    CHECK(a.rhs == 1);

    auto b = fs_coefficients(0, 2, 1);
    CHECK(b.inside == 1);
    CHECK(b.outside == -1);
    CHECK(b.rhs == 0);

    CHECK_THROWS_AS(fs_coefficients(5, 12, 5), Error);
    CHECK_THROWS_AS(fs_coefficients(5, 12, 12), Error);
}

TEST_CASE("build_fs: worked examples and errors") {
    auto u = u43();
    CardinalitySequence c({1, 3});
    auto cut = build_fs(u, set_of(u, {0, 1}), c);
    CHECK(cut.coeffs == std::vector<Rational>{1, 1, -1, -1});
    CHECK(cut.rhs == Rational(1));
    CHECK(cut.sense == Sense::le);
    CHECK(cut.provenance.type == Provenance::Type::fs);
    CHECK(cut.provenance.level == 1);

    CHECK_THROWS_WITH_AS(build_fs(u, set_of(u, {0}), c), doctest::Contains("strictly between"),
                         Error);

    auto g = k4();
    auto kcut = build_fs(g, set_of(g, {0, 1, 3}), CardinalitySequence({1, 3}));
    CHECK(kcut.coeffs == std::vector<Rational>{1, 1, -1, 1, -1, -1});
    CHECK(kcut.rhs == Rational(1));

    // extended mode admits the (0, c_1) pair only on request
    CardinalitySequence c24({2, 4});
    auto uu = u54();
    CHECK_THROWS_AS(build_fs(uu, set_of(uu, {0}), c24), Error);
    auto ext = build_fs(uu, set_of(uu, {0}), c24, true);
    CHECK(ext.provenance.level == 0);
    CHECK(ext.rhs == Rational(0));
}

TEST_CASE("build_rank_ineq") {
    auto u = u43();
    auto full = build_rank_ineq(u, u.full_subset());
    CHECK(full.rhs == Rational(3));
    auto tri = triangle();
    CHECK(build_rank_ineq(tri, tri.full_subset()).rhs == Rational(2));
    auto single = build_rank_ineq(u, set_of(u, {0}));
    CHECK(single.rhs == Rational(1));
    CHECK(single.coeffs == std::vector<Rational>{1, 0, 0, 0});
    CHECK_THROWS_AS(build_rank_ineq(u, u.empty_subset()), Error);
}

TEST_CASE("affine rank") {
    CHECK(affine_rank({pt({1, 0, 0, 0}), pt({1, 1, 1, 0}), pt({1, 1, 0, 1}), pt({1, 0, 1, 1})}) ==
          4);
    CHECK(affine_rank({pt({2, 5})}) == 1);
    CHECK(affine_rank({pt({2, 5}), pt({2, 5})}) == 1);
    CHECK(affine_rank({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})}) == 3);
    CHECK_THROWS_AS(affine_rank({}), Error);
    CHECK(linear_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
}

TEST_CASE("polytope dimension") {
    CHECK(polytope_dimension(u43(), CardinalitySequence({1, 3})) == 4);
    CHECK(polytope_dimension(partition22(), CardinalitySequence({0, 2})) == 3);
    CHECK(polytope_dimension(u43(), CardinalitySequence::single(3)) == 3);
}

TEST_CASE("facet oracle on the worked cuts") {
    auto u = u43();
    CardinalitySequence c({1, 3});

    auto v1 = facet_oracle(u, c, build_rank_ineq(u, set_of(u, {0})));
    CHECK(v1.is_facet);
    CHECK(v1.dim_polytope == 4);
    CHECK(v1.dim_face == 3);
    CHECK(v1.witness.size() == 4);

    auto v2 = facet_oracle(u, c, build_fs(u, set_of(u, {0, 1}), c));
    CHECK(v2.is_facet);

    auto v3 = facet_oracle(u, c, build_rank_ineq(u, u.full_subset()));
    CHECK(v3.is_facet);

    LinearInequality invalid;
    invalid.coeffs = {Rational(1), Rational(0), Rational(0), Rational(0)};
    invalid.sense = Sense::le;
    invalid.rhs = Rational(0); // cut off the vertex {0}
    CHECK_THROWS_WITH_AS(facet_oracle(u, c, invalid), doctest::Contains("violated"), Error);
}

TEST_CASE("forbidden-set cuts are valid on every vertex, and cut something") {
    for (auto& [id, m] : property_matroids()) {
        CAPTURE(id);
        const std::size_t n = m.size();
        const std::size_t r = m.rank();
        if (r < 2) continue;
        std::vector<CardinalitySequence> seqs;
        if (r >= 2) seqs.push_back(CardinalitySequence({0, r}));
        seqs.push_back(CardinalitySequence({r >= 3 ? std::size_t(1) : std::size_t(0), r}));
        for (const auto& c : seqs) {
            auto vertices = enumerate_feasible(m, c);
            for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
                Subset f(mask, n);
                if (!c.gap_level(m.rank(f))) continue;
                auto cut = build_fs(m, f, c);
                for (const auto& v : vertices)
                    CHECK(cut.satisfied_by(incidence_vector(v)));
                // a basis of f has forbidden cardinality and violates the cut
                Subset basis = m.empty_subset();
                for (std::size_t e = 0; e < n; ++e)
                    if (f.contains(e) && m.is_independent(basis.with(e))) basis = basis.with(e);
                CHECK(basis.count() == m.rank(f));
                CHECK_FALSE(cut.satisfied_by(incidence_vector(basis)));
                CHECK_FALSE(c.contains(basis.count()));
            }
        }
    }
}

TEST_CASE("clamping the coefficient to the rank revives the cut's face") {
    // Path 0-1-...-5 with every edge doubled: 10 edges, rank 5. Edges 2i and
    // 2i+1 are the parallel pair on slot i.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, i + 1);
        edges.emplace_back(i, i + 1);
    }
    auto m = MatroidInstance::graphic(6, std::move(edges));
    REQUIRE(m.rank() == 5);
    CardinalitySequence c({3, 5});
    auto vertices = enumerate_feasible(m, c);

    // Cardinality-based cut on the four parallels of slots 0 and 1 (rank 2):
    // valid for every feasible vertex, but nothing is ever tight.
    Subset f = Subset::from_indices({0, 1, 2, 3}, 10);
    REQUIRE(m.rank(f) == 2);
    LinearInequality plain;
    plain.coeffs.assign(10, Rational(-1)); // |F|=4 in the gap (3,5)
    for (int e : f.indices()) plain.coeffs[static_cast<std::size_t>(e)] = Rational(1);
    plain.sense = Sense::le;
    plain.rhs = Rational(3);
    std::size_t tight = 0;
    for (const auto& v : vertices) {
        Point x = incidence_vector(v);
        CHECK(plain.satisfied_by(x));
        if (plain.tight_at(x)) ++tight;
    }
    CHECK(tight == 0);
    auto verdict = facet_oracle(m, c, plain);
    CHECK(verdict.dim_face == -1);
    CHECK_FALSE(verdict.is_facet);

    // Filling the set up to rank 4 (slots 0-3) gives the rank-induced cut,
    // which is tight at both neighboring cardinalities.
    Subset filled = Subset::from_indices({0, 1, 2, 3, 4, 5, 6, 7}, 10);
    REQUIRE(m.rank(filled) == 4);
    auto cut = build_fs(m, filled, c);
    CHECK(cut.rhs == Rational(3));
    bool tight_low = false, tight_high = false;
    for (const auto& v : vertices) {
        Point x = incidence_vector(v);
        CHECK(cut.satisfied_by(x));
        if (cut.tight_at(x)) {
            if (v.count() == 3) tight_low = true;
            if (v.count() == 5) tight_high = true;
        }
    }
    CHECK(tight_low);
    CHECK(tight_high);
}

TEST_CASE("every vertex satisfies the rank inequalities, tight at itself") {
    for (auto& entry : acceptance_catalog()) {
        CAPTURE(entry.id);
        const std::size_t n = entry.m.size();
        auto vertices = enumerate_feasible(entry.m, entry.c);
        for (const auto& v : vertices) {
            Point x = incidence_vector(v);
            for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
                Subset f(mask, n);
                auto ineq = build_rank_ineq(entry.m, f);
                CHECK(ineq.satisfied_by(x));
                if (f == v && !v.empty()) CHECK(ineq.tight_at(x));
            }
        }
    }
}

TEST_CASE("rank facet predicate: worked verdicts") {
    auto u = u43();
    CardinalitySequence c({1, 3});
    CHECK(rank_facet_verdict(u, set_of(u, {0}), c));        // clause (iii)
    CHECK_FALSE(rank_facet_verdict(u, set_of(u, {0, 1}), c));
    CHECK(rank_facet_verdict(u, u.full_subset(), c));       // clause (iv)

    auto part = partition22();
    CardinalitySequence c02({0, 2});
    CHECK(rank_facet_verdict(part, set_of(part, {0, 1}), c02)); // clause (v)
    CHECK_FALSE(rank_facet_verdict(part, set_of(part, {0}), c02));
}

TEST_CASE("fs facet predicate: worked verdicts") {
    auto u = u43();
    auto v1 = fs_facet_verdict(u, set_of(u, {0, 1}), CardinalitySequence({1, 3}));
    CHECK(v1.is_facet);
    CHECK(v1.clause == 'b');

    auto g = k4();
    auto v2 = fs_facet_verdict(g, set_of(g, {0, 1}), CardinalitySequence({1, 3}));
    CHECK_FALSE(v2.is_facet); // closure adds the third triangle edge

    auto v3 = fs_facet_verdict(u, set_of(u, {0}), CardinalitySequence({0, 2}));
    CHECK(v3.is_facet);
    CHECK(v3.clause == 'a');
}

TEST_CASE("single-k predicates") {
    auto u = u43();
    auto a = single_k_predicates(u, std::nullopt, 3);
    CHECK(a.full_dimension); // E inseparable
    CHECK(polytope_dimension(u, CardinalitySequence::single(3)) == u.size() - 1);

    auto part = partition22();
    auto b = single_k_predicates(part, std::nullopt, 2);
    CHECK_FALSE(b.full_dimension); // E separable and k = r(E)
    CHECK(polytope_dimension(part, CardinalitySequence::single(2)) == 2);

    for (auto& [id, m] : property_matroids()) {
        CAPTURE(id);
        auto v = single_k_predicates(m, std::nullopt, 1);
        CHECK(v.full_dimension);
        CHECK(polytope_dimension(m, CardinalitySequence::single(1)) == m.size() - 1);
        auto vertices = enumerate_feasible(m, CardinalitySequence::single(1));
        CHECK(vertices.size() == m.size());
    }

    CHECK_THROWS_AS(single_k_predicates(u, std::nullopt, 0), Error);
    CHECK_THROWS_AS(single_k_predicates(u, std::nullopt, 4), Error);
}

TEST_CASE("truncation keeps E inseparable below full rank") {
    for (auto& [id, m] : property_matroids()) {
        CAPTURE(id);
        for (std::size_t k = 1; k < m.rank(); ++k)
            CHECK(m.truncate(k).is_inseparable(m.full_subset()));
    }
}

TEST_CASE("closed complements are k-inseparable in the truncation") {
    for (auto& [id, m] : property_matroids()) {
        CAPTURE(id);
        const std::size_t n = m.size();
        if (n > 6) continue;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
            Subset f(mask, n);
            Subset fbar = f.complement();
            if (fbar.empty() || !m.is_closed(fbar)) continue;
            for (std::size_t k = m.rank(fbar) + 1; k < m.rank(); ++k)
                CHECK(m.truncate(k).is_k_inseparable(f, k));
        }
    }
}

TEST_CASE("tight-matrix rank equivalence") {
    for (auto& [id, m] : property_matroids()) {
        CAPTURE(id);
        const std::size_t n = m.size();
        if (n > 6) continue;
        const std::size_t r = m.rank();
        for (std::size_t k = 1; k <= r; ++k) {
            for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
                Subset f(mask, n);
                bool full_rank = linear_rank(tight_matrix_columns_f(m, f, k)) == f.count();
                bool predicted = m.k_rank(f, k) >= 1 && m.is_closed(f.complement()) &&
                                 (m.is_k_inseparable(f, k) || k < r);
                CAPTURE(f.str());
                CAPTURE(k);
                CHECK(full_rank == predicted);
            }
        }
    }
}
