#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cardmat/errors.hpp"
#include "cardmat/rng.hpp"
#include "cardmat/separation.hpp"
#include "cardmat/simplex.hpp"
#include "support/catalog.hpp"

using namespace cardmat;
using namespace cardmat::testing;

namespace {

Point pt(std::initializer_list<const char*> values) {
    Point p;
    for (const char* v : values) p.push_back(Rational::parse(v));
    return p;
}

Point random_nonneg(Rng& rng, std::size_t n) {
    Point x;
    for (std::size_t e = 0; e < n; ++e) x.push_back(rng.rational(0, 8, 5));
    return x;
}

// A random point satisfying all rank inequalities: project a random box point
// onto P_M via the augmenting-path engine, optionally shrunk.
Point random_in_matroid_polytope(Rng& rng, const MatroidInstance& m) {
    Point y = separate_rank_augpath(m, random_nonneg(rng, m.size())).y;
    if (rng.below(2) == 0) {
        Rational shrink = rng.rational(1, 4, 5); // in (0, 4]
        if (shrink > Rational(1)) shrink = Rational(1);
        for (auto& v : y) v *= shrink;
    }
    return y;
}

struct ExhaustiveFs {
    bool violated = false;
    Rational worst;
    Subset witness;
};

ExhaustiveFs exhaustive_fs(const MatroidInstance& m, const Point& x,
                           const CardinalitySequence& c) {
    ExhaustiveFs result;
    const std::size_t n = m.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        Subset f(mask, n);
        if (!c.gap_level(m.rank(f))) continue;
        Rational violation = build_fs(m, f, c).violation_at(x);
        if (violation.sign() > 0 && (!result.violated || violation > result.worst)) {
            result.violated = true;
            result.worst = violation;
            result.witness = f;
        }
    }
    return result;
}

void check_certificate(const MatroidInstance& m, const Point& x, const MinMaxCertificate& cert) {
    Rational mass;
    Point recomposed(m.size(), Rational(0));
    for (const auto& [weight, member] : cert.decomposition) {
        CHECK(weight.sign() > 0);
        CHECK(m.is_independent(member));
        mass += weight;
        for (int e : member.indices()) recomposed[static_cast<std::size_t>(e)] += weight;
    }
    CHECK(mass == Rational(1));
    CHECK(recomposed == cert.y);
    for (std::size_t e = 0; e < m.size(); ++e) CHECK(cert.y[e] <= x[e]);
    CHECK(sum(cert.y) == cert.value);
    Rational bound = Rational(static_cast<long>(m.rank(cert.f_star))) +
                     sum_over(x, cert.f_star.complement());
    CHECK(cert.value == bound);
    // equality structure: y is tight on f_star and equals x outside it
    CHECK(sum_over(cert.y, cert.f_star) ==
          Rational(static_cast<long>(m.rank(cert.f_star))));
    for (int e : cert.f_star.complement().indices())
        CHECK(cert.y[static_cast<std::size_t>(e)] == x[static_cast<std::size_t>(e)]);
}

} // namespace

TEST_CASE("brute-force rank separation: worked examples") {
    auto u = u43();
    auto a = separate_rank_bruteforce(u, pt({"7/8", "7/8", "1/8", "1/8"}));
    CHECK(a.first.empty());
    CHECK(a.second == Rational(0));

    auto b = separate_rank_bruteforce(u, pt({"1", "1", "1", "1"}));
    CHECK(b.first == u.full_subset());
    CHECK(b.second == Rational(1));

    auto tri = triangle();
    auto t = separate_rank_bruteforce(tri, pt({"3/4", "3/4", "3/4"}));
    CHECK(t.first == tri.full_subset());
    CHECK(t.second == Rational::parse("1/4"));

    CHECK_THROWS_WITH_AS(separate_rank_bruteforce(u, pt({"-1", "0", "0", "0"})),
                         doctest::Contains("negative"), Error);
    CHECK_THROWS_WITH_AS(separate_rank_bruteforce(u, pt({"1", "1", "1", "1"}), 2),
                         doctest::Contains("limit"), Error);
}

TEST_CASE("augmenting-path engine: worked examples") {
    auto tri = triangle();
    auto cert = separate_rank_augpath(tri, pt({"3/4", "3/4", "3/4"}));
    CHECK(cert.value == Rational(2));
    CHECK(cert.f_star == tri.full_subset());
    check_certificate(tri, pt({"3/4", "3/4", "3/4"}), cert);

    auto u = u43();
    Point x = pt({"7/8", "7/8", "1/8", "1/8"});
    auto cert2 = separate_rank_augpath(u, x);
    CHECK(cert2.value == Rational(2));
    CHECK(cert2.f_star.empty());
    CHECK(cert2.y == x);
    check_certificate(u, x, cert2);

    Point zero(4, Rational(0));
    auto cert3 = separate_rank_augpath(u, zero);
    CHECK(cert3.value == Rational(0));
    REQUIRE(cert3.decomposition.size() == 1);
    CHECK(cert3.decomposition.front().first == Rational(1));
    CHECK(cert3.decomposition.front().second.empty());
}

TEST_CASE("engine agreement on random points") {
    Rng rng(1001);
    auto instances = property_matroids();
    instances.emplace_back("wheel6", wheel(6)); // 12 elements
    for (auto& [id, m] : instances) {
        CAPTURE(id);
        int trials = m.size() > 8 ? 20 : 60;
        for (int trial = 0; trial < trials; ++trial) {
            Point x = random_nonneg(rng, m.size());
            auto cert = separate_rank_augpath(m, x);
            check_certificate(m, x, cert);
            auto [f, value] = separate_rank_bruteforce(m, x);
            CHECK(sum(x) - cert.value == value);
            // both optima attain the same objective
            CHECK(sum_over(x, cert.f_star) -
                      Rational(static_cast<long>(m.rank(cert.f_star))) ==
                  value);
        }
    }
}

TEST_CASE("fs separation: worked examples") {
    auto u = u43();
    CardinalitySequence c({1, 3});

    Point x = pt({"7/8", "7/8", "1/8", "1/8"});
    auto out = separate_fs(u, x, c, FsEngine::automatic, true);
    REQUIRE(out.violated());
    REQUIRE(out.cut);
    CHECK(out.cut->coeffs == std::vector<Rational>{1, 1, -1, -1});
    CHECK(out.cut->rhs == Rational(1));
    CHECK(out.cut->lhs_at(x) == Rational::parse("3/2"));
    CHECK(out.violation == Rational::parse("1/2"));
    CHECK(out.witness == Subset::from_indices({0, 1}, 4));
    REQUIRE(out.delta);
    CHECK(*out.delta == Rational::parse("1/2"));

    auto inside = separate_fs(u, pt({"3/4", "3/4", "1/4", "1/4"}), c, FsEngine::automatic, true);
    CHECK_FALSE(inside.violated()); // threshold met with equality

    // a vertex with x(E) = c_p is inside without any scaling
    auto vertex = separate_fs(u, pt({"1", "0", "0", "0"}), c, FsEngine::automatic, true);
    CHECK_FALSE(vertex.violated());
    CHECK_FALSE(vertex.delta);
}

TEST_CASE("fs separation rejects rank-infeasible points in checked mode") {
    auto u = u43();
    CHECK_THROWS_WITH_AS(separate_fs(u, pt({"2", "0", "0", "0"}), CardinalitySequence({1, 3}),
                                     FsEngine::automatic, true),
                         doctest::Contains("rank"), Error);
}

TEST_CASE("fs separation agrees with exhaustive evaluation") {
    Rng rng(9090);
    auto entries = acceptance_catalog();
    entries.push_back({"wheel6-c25", wheel(6), CardinalitySequence({2, 5})});
    for (auto& entry : entries) {
        CAPTURE(entry.id);
        int trials = entry.m.size() > 8 ? 15 : 60;
        for (int trial = 0; trial < trials; ++trial) {
            Point x = random_in_matroid_polytope(rng, entry.m);
            auto fast = separate_fs(entry.m, x, entry.c, FsEngine::automatic, false);
            auto slow = exhaustive_fs(entry.m, x, entry.c);
            CAPTURE(trial);
            CHECK(fast.violated() == slow.violated);
            if (fast.violated()) {
                // maximal violation matches, and the witness rank guard holds
                CHECK(fast.violation == slow.worst);
                std::size_t rho = entry.m.rank(*fast.witness);
                auto level = entry.c.gap_level(rho);
                CHECK(level.has_value());
            }
        }
    }
}

TEST_CASE("no forbidden-set cut is violated on a feasible cardinality") {
    Rng rng(515);
    for (auto& entry : acceptance_catalog()) {
        CAPTURE(entry.id);
        for (int trial = 0; trial < 20; ++trial) {
            Point y = separate_rank_augpath(entry.m, random_nonneg(rng, entry.m.size())).y;
            Rational total = sum(y);
            for (std::size_t p = 0; p < entry.c.size(); ++p) {
                Rational target(static_cast<long>(entry.c[p]));
                if (total < target || total.is_zero()) continue;
                Point scaled(y.size());
                for (std::size_t e = 0; e < y.size(); ++e)
                    scaled[e] = y[e] * target / total;
                CHECK_FALSE(exhaustive_fs(entry.m, scaled, entry.c).violated);
                CHECK_FALSE(
                    separate_fs(entry.m, scaled, entry.c, FsEngine::automatic, false).violated());
            }
        }
    }
}

TEST_CASE("free-matroid fast path agrees with the scaling path") {
    Rng rng(31337);
    auto m = free5();
    for (const auto& c : {CardinalitySequence({1, 3}), CardinalitySequence({1, 4}),
                          CardinalitySequence({0, 2, 5})}) {
        for (int trial = 0; trial < 120; ++trial) {
            Point x = random_in_matroid_polytope(rng, m);
            auto fast = separate_fs(m, x, c, FsEngine::fast_free, false);
            auto scaling = separate_fs(m, x, c, FsEngine::scaling, false);
            CHECK(fast.violated() == scaling.violated());
            if (fast.violated()) CHECK(fast.violation == scaling.violation);
        }
    }
}

TEST_CASE("separation requires a two-member sequence") {
    auto u = u43();
    CHECK_THROWS_AS(separate_point(u, Point(4, Rational(0)), CardinalitySequence::single(3)),
                    Error);
    CHECK_THROWS_AS(
        separate_fs(u, Point(4, Rational(0)), CardinalitySequence::single(3)), Error);
}

TEST_CASE("separate_point: ordered checks") {
    auto u = u43();
    CardinalitySequence c({1, 3});

    auto neg = separate_point(u, pt({"-1", "0", "0", "0"}), c);
    REQUIRE(neg.violated());
    CHECK(neg.cut->provenance.type == Provenance::Type::nonneg);
    CHECK(neg.violation == Rational(1));

    auto low = separate_point(u, pt({"1/8", "1/8", "1/8", "1/8"}), c);
    REQUIRE(low.violated());
    CHECK(low.cut->provenance.type == Provenance::Type::lower_bound);

    auto high = separate_point(u, pt({"1", "1", "1", "1/2"}), c);
    REQUIRE(high.violated());
    CHECK(high.cut->provenance.type == Provenance::Type::upper_bound);

    auto rank_violated = separate_point(u, pt({"3/2", "1/4", "1/4", "1/4"}), c);
    REQUIRE(rank_violated.violated());
    CHECK(rank_violated.cut->provenance.type == Provenance::Type::rank);
    CHECK(rank_violated.witness == Subset::from_indices({0}, 4));

    auto fs = separate_point(u, pt({"7/8", "7/8", "1/8", "1/8"}), c);
    REQUIRE(fs.violated());
    CHECK(fs.cut->provenance.type == Provenance::Type::fs);

    auto inside = separate_point(u, pt({"1", "1", "1", "0"}), c);
    CHECK_FALSE(inside.violated());
    REQUIRE(inside.certificate);
    check_certificate(u, pt({"1", "1", "1", "0"}), *inside.certificate);
}

TEST_CASE("membership equivalence: inside iff in the convex hull") {
    Rng rng(2718);
    for (auto& entry : acceptance_catalog()) {
        CAPTURE(entry.id);
        auto vertices = enumerate_feasible(entry.m, entry.c);
        std::vector<Point> hull;
        for (const auto& v : vertices) hull.push_back(incidence_vector(v));
        int inside_seen = 0, outside_seen = 0;
        for (int trial = 0; trial < 25; ++trial) {
            Point x;
            if (trial % 2 == 0) {
                // convex combination of two vertices: always inside
                const Point& a = hull[rng.below(hull.size())];
                const Point& b = hull[rng.below(hull.size())];
                Rational lambda = rng.rational(0, 4, 4);
                if (lambda > Rational(1)) lambda = Rational(1);
                for (std::size_t e = 0; e < a.size(); ++e)
                    x.push_back(lambda * a[e] + (Rational(1) - lambda) * b[e]);
            } else {
                x = random_in_matroid_polytope(rng, entry.m);
            }
            bool inside = !separate_point(entry.m, x, entry.c).violated();
            bool member = lp_member_of_hull(x, hull);
            CAPTURE(trial);
            CHECK(inside == member);
            (inside ? inside_seen : outside_seen)++;
        }
        CHECK(inside_seen > 0);
    }
}
