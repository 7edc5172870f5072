#include "cardmat/affine.hpp"

#include "cardmat/errors.hpp"

namespace cardmat {

namespace {

// Reduces v against the basis rows in place; returns false if v vanishes.
// Basis rows are kept with a leading pivot column each.
struct EliminationBasis {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivot_cols;

    bool try_insert(std::vector<Rational> v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Rational& head = v[pivot_cols[r]];
            if (head.is_zero()) continue;
            Rational factor = head / rows[r][pivot_cols[r]];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * rows[r][j];
        }
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!v[j].is_zero()) {
                pivot_cols.push_back(j);
                rows.push_back(std::move(v));
                return true;
            }
        }
        return false;
    }
};

} // namespace

std::size_t linear_rank(std::vector<std::vector<Rational>> rows) {
    EliminationBasis basis;
    for (auto& row : rows) {
        if (!basis.rows.empty() && row.size() != basis.rows.front().size())
            fail("dimension-mismatch", "matrix rows of unequal length");
        basis.try_insert(std::move(row));
    }
    return basis.rows.size();
}

std::size_t affine_rank(const std::vector<Point>& pts) {
    return affine_basis_indices(pts).size();
}

std::vector<std::size_t> affine_basis_indices(const std::vector<Point>& pts) {
    if (pts.empty()) fail("empty-input", "affine rank of an empty point list");
    const std::size_t dim = pts.front().size();
    for (const auto& p : pts)
        if (p.size() != dim) fail("dimension-mismatch", "points of unequal dimension");

    std::vector<std::size_t> chosen{0};
    EliminationBasis basis;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> diff(dim);
        for (std::size_t j = 0; j < dim; ++j) diff[j] = pts[i][j] - pts[0][j];
        if (basis.try_insert(std::move(diff))) chosen.push_back(i);
    }
    return chosen;
}

} // namespace cardmat
