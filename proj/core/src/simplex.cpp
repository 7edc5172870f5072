#include "cardmat/simplex.hpp"

#include "cardmat/errors.hpp"

#include <algorithm>

namespace cardmat {

void InequalitySystem::add(LinearInequality ineq) {
    if (ineq.dimension() != dimension)
        fail("dimension-mismatch", "inequality dimension does not match the system");
    rows.push_back(std::move(ineq));
}

bool InequalitySystem::satisfied_by(const Point& x) const {
    for (const auto& row : rows)
        if (!row.satisfied_by(x)) return false;
    return true;
}

namespace {

// Dense rational tableau. Free variables are split as x = u - v; every row is
// normalized to <= with a slack, rows with negative right-hand side get a
// phase-1 artificial. Bland's rule everywhere: smallest eligible entering
// column, smallest basic variable among minimum-ratio rows.
class Tableau {
public:
    Tableau(const InequalitySystem& sys, const WeightVector& obj) : dim_(sys.dimension) {
        const std::size_t m = sys.rows.size();
        structural_ = 2 * dim_;
        artificial_base_ = structural_ + m;

        std::size_t artificial_count = 0;
        for (const auto& ineq : sys.rows) {
            Rational oriented = ineq.sense == Sense::le ? ineq.rhs : -ineq.rhs;
            if (oriented.sign() < 0) ++artificial_count;
        }
        cols_ = artificial_base_ + artificial_count;

        rows_.assign(m, {});
        basis_.assign(m, 0);
        std::size_t next_artificial = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& ineq = sys.rows[i];
            Rational flip = ineq.sense == Sense::le ? Rational(1) : Rational(-1);
            auto& row = rows_[i];
            row.assign(cols_ + 1, Rational(0));
            for (std::size_t j = 0; j < dim_; ++j) {
                row[j] = flip * ineq.coeffs[j];
                row[dim_ + j] = -row[j];
            }
            row[structural_ + i] = Rational(1); // slack
            row[cols_] = flip * ineq.rhs;
            if (row[cols_].sign() < 0) {
                for (auto& entry : row) entry = -entry;
                row[artificial_base_ + next_artificial] = Rational(1);
                basis_[i] = artificial_base_ + next_artificial;
                ++next_artificial;
            } else {
                basis_[i] = structural_ + i;
            }
        }

        if (artificial_count > 0) run_phase1();
        run_phase2(obj);
    }

    Point solution() const {
        Point x(dim_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::size_t j = basis_[i];
            if (j < dim_) x[j] += rows_[i][cols_];
            else if (j < structural_) x[j - dim_] -= rows_[i][cols_];
        }
        return x;
    }

private:
    bool is_artificial(std::size_t j) const { return j >= artificial_base_; }

    void pivot(std::size_t r, std::size_t j) {
        auto& prow = rows_[r];
        Rational inv = Rational(1) / prow[j];
        for (auto& entry : prow) entry *= inv;
        for (std::size_t i = 0; i <= rows_.size(); ++i) {
            auto& row = i == rows_.size() ? objective_ : rows_[i];
            if (&row == &prow) continue;
            Rational factor = row[j];
            if (factor.is_zero()) continue;
            for (std::size_t k = 0; k <= cols_; ++k) row[k] -= factor * prow[k];
        }
        basis_[r] = j;
    }

    // Maximizes with reduced costs in objective_; returns false on
    // unboundedness.
    bool optimize(bool allow_artificial) {
        while (true) {
            std::size_t entering = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allow_artificial && is_artificial(j)) continue;
                if (objective_[j].sign() < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == cols_) return true;

            std::size_t leaving = rows_.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][entering].sign() <= 0) continue;
                Rational ratio = rows_[i][cols_] / rows_[i][entering];
                if (leaving == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == rows_.size()) return false;
            pivot(leaving, entering);
        }
    }

    void install_objective(const std::vector<Rational>& cost) {
        objective_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < cols_; ++j) objective_[j] = -cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& c_b = cost[basis_[i]];
            if (c_b.is_zero()) continue;
            for (std::size_t k = 0; k <= cols_; ++k)
                objective_[k] += c_b * rows_[i][k];
        }
    }

    void run_phase1() {
        std::vector<Rational> cost(cols_, Rational(0));
        for (std::size_t j = artificial_base_; j < cols_; ++j) cost[j] = Rational(-1);
        install_objective(cost);
        if (!optimize(/*allow_artificial=*/true))
            fail("internal-error", "phase-1 objective cannot be unbounded");
        if (objective_[cols_].sign() != 0) fail("infeasible", "the system has no solution");

        // Pivot surviving artificials out; rows that cannot release one are
        // redundant and dropped.
        for (std::size_t i = 0; i < rows_.size();) {
            if (!is_artificial(basis_[i])) {
                ++i;
                continue;
            }
            std::size_t col = artificial_base_;
            for (std::size_t j = 0; j < artificial_base_; ++j) {
                if (!rows_[i][j].is_zero()) {
                    col = j;
                    break;
                }
            }
            if (col < artificial_base_) {
                pivot(i, col);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<long>(i));
                basis_.erase(basis_.begin() + static_cast<long>(i));
            }
        }
    }

    void run_phase2(const WeightVector& obj) {
        std::vector<Rational> cost(cols_, Rational(0));
        for (std::size_t j = 0; j < dim_; ++j) {
            cost[j] = obj[j];
            cost[dim_ + j] = -obj[j];
        }
        install_objective(cost);
        if (!optimize(/*allow_artificial=*/false))
            fail("unbounded", "the objective is unbounded over the system");
    }

    std::size_t dim_;
    std::size_t structural_ = 0;
    std::size_t cols_ = 0;
    std::size_t artificial_base_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> objective_;
    std::vector<std::size_t> basis_;
};

} // namespace

LpSolution simplex_max(const InequalitySystem& sys, const WeightVector& obj) {
    if (obj.size() != sys.dimension)
        fail("dimension-mismatch", "objective dimension does not match the system");
    Tableau tableau(sys, obj);
    Point x = tableau.solution();
    return {x, dot(obj, x)};
}

bool lp_member_of_hull(const Point& x, const std::vector<Point>& vertices) {
    if (vertices.empty()) return false;
    const std::size_t n = x.size();
    const std::size_t k = vertices.size();
    InequalitySystem sys(k);
    for (std::size_t j = 0; j < n; ++j) {
        LinearInequality eq_le, eq_ge;
        eq_le.coeffs.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            if (vertices[i].size() != n) fail("dimension-mismatch", "vertex dimension mismatch");
            eq_le.coeffs.push_back(vertices[i][j]);
        }
        eq_le.sense = Sense::le;
        eq_le.rhs = x[j];
        eq_ge = eq_le;
        eq_ge.sense = Sense::ge;
        sys.add(eq_le);
        sys.add(eq_ge);
    }
    LinearInequality sum_le, sum_ge;
    sum_le.coeffs.assign(k, Rational(1));
    sum_le.sense = Sense::le;
    sum_le.rhs = Rational(1);
    sum_ge = sum_le;
    sum_ge.sense = Sense::ge;
    sys.add(sum_le);
    sys.add(sum_ge);
    for (std::size_t i = 0; i < k; ++i) sys.add(nonneg_ineq(k, i));

    try {
        simplex_max(sys, WeightVector(k, Rational(0)));
        return true;
    } catch (const Error& err) {
        if (err.code() == "infeasible") return false;
        throw;
    }
}

} // namespace cardmat
