#pragma once

#include "cardmat/inequality.hpp"
#include "cardmat/rational.hpp"

#include <cstddef>
#include <vector>

namespace cardmat {

/// Finite system of exact linear inequalities in a fixed dimension.
struct InequalitySystem {
    std::size_t dimension = 0;
    std::vector<LinearInequality> rows;

    explicit InequalitySystem(std::size_t dim) : dimension(dim) {}
    void add(LinearInequality ineq);
    bool satisfied_by(const Point& x) const;
};

struct LpSolution {
    Point point;
    Rational value;
};

/// max obj·x subject to sys, by dense two-phase rational simplex with Bland's
/// rule (free variables split into differences of nonnegatives). Exact and
/// deterministic. Throws "infeasible" / "unbounded".
LpSolution simplex_max(const InequalitySystem& sys, const WeightVector& obj);

/// Is x a convex combination of the given points? Solved exactly as an LP
/// feasibility problem over the combination weights.
bool lp_member_of_hull(const Point& x, const std::vector<Point>& vertices);

} // namespace cardmat
