#include "cardmat/inequality.hpp"

#include "cardmat/errors.hpp"

namespace cardmat {

Provenance Provenance::rank_of(Subset f) { return {Type::rank, std::move(f), {}, {}}; }

Provenance Provenance::fs_of(Subset f, std::size_t level) {
    return {Type::fs, std::move(f), level, {}};
}

Rational LinearInequality::lhs_at(const Point& x) const { return dot(coeffs, x); }

bool LinearInequality::satisfied_by(const Point& x) const {
    Rational lhs = lhs_at(x);
    return sense == Sense::le ? lhs <= rhs : lhs >= rhs;
}

bool LinearInequality::tight_at(const Point& x) const { return lhs_at(x) == rhs; }

Rational LinearInequality::violation_at(const Point& x) const {
    Rational lhs = lhs_at(x);
    return sense == Sense::le ? lhs - rhs : rhs - lhs;
}

Point incidence_vector(const Subset& s) {
    Point x(s.universe_size(), Rational(0));
    for (int e : s.indices()) x[static_cast<std::size_t>(e)] = Rational(1);
    return x;
}

Rational sum_over(const Point& x, const Subset& s) {
    if (x.size() != s.universe_size()) fail("dimension-mismatch", "point/subset size mismatch");
    Rational total;
    for (int e : s.indices()) total += x[static_cast<std::size_t>(e)];
    return total;
}

FsCoefficients fs_coefficients(std::size_t c_p, std::size_t c_next, std::size_t rho) {
    if (!(c_p < rho && rho < c_next))
        fail("gap-violation", "rank " + std::to_string(rho) + " is not strictly between " +
                                  std::to_string(c_p) + " and " + std::to_string(c_next));
    long inside = static_cast<long>(c_next) - static_cast<long>(rho);
    long outside = -(static_cast<long>(rho) - static_cast<long>(c_p));
    long rhs = static_cast<long>(c_p) * inside;
    return {inside, outside, rhs};
}

LinearInequality build_fs(const MatroidInstance& m, const Subset& f,
                          const CardinalitySequence& c, bool extended_zero_level) {
    c.require_pair();
    std::size_t rho = m.rank(f);
    std::size_t lo = 0, hi = 0, level = 0;
    if (auto p = c.gap_level(rho)) {
        lo = c[*p];
        hi = c[*p + 1];
        level = *p + 1; // 1-based pair index
    } else if (extended_zero_level && c.front() > 0 && 0 < rho && rho < c.front()) {
        lo = 0;
        hi = c.front();
        level = 0;
    } else {
        fail("feasible-rank", "rank " + std::to_string(rho) +
                                  " does not lie strictly between consecutive cardinalities");
    }
    auto fc = fs_coefficients(lo, hi, rho);
    LinearInequality ineq;
    ineq.coeffs.assign(m.size(), Rational(fc.outside));
    for (int e : f.indices()) ineq.coeffs[static_cast<std::size_t>(e)] = Rational(fc.inside);
    ineq.sense = Sense::le;
    ineq.rhs = Rational(fc.rhs);
    ineq.provenance = Provenance::fs_of(f, level);
    return ineq;
}

LinearInequality build_rank_ineq(const MatroidInstance& m, const Subset& f) {
    if (f.empty()) fail("empty-set", "rank inequality of the empty set is undefined");
    LinearInequality ineq;
    ineq.coeffs.assign(m.size(), Rational(0));
    for (int e : f.indices()) ineq.coeffs[static_cast<std::size_t>(e)] = Rational(1);
    ineq.sense = Sense::le;
    ineq.rhs = Rational(static_cast<long>(m.rank(f)));
    ineq.provenance = Provenance::rank_of(f);
    return ineq;
}

LinearInequality lower_bound_ineq(std::size_t n, std::size_t c1) {
    LinearInequality ineq;
    ineq.coeffs.assign(n, Rational(1));
    ineq.sense = Sense::ge;
    ineq.rhs = Rational(static_cast<long>(c1));
    ineq.provenance = Provenance::lower();
    return ineq;
}

LinearInequality upper_bound_ineq(std::size_t n, std::size_t cm) {
    LinearInequality ineq;
    ineq.coeffs.assign(n, Rational(1));
    ineq.sense = Sense::le;
    ineq.rhs = Rational(static_cast<long>(cm));
    ineq.provenance = Provenance::upper();
    return ineq;
}

LinearInequality nonneg_ineq(std::size_t n, std::size_t e) {
    LinearInequality ineq;
    ineq.coeffs.assign(n, Rational(0));
    ineq.coeffs[e] = Rational(1);
    ineq.sense = Sense::ge;
    ineq.rhs = Rational(0);
    ineq.provenance = Provenance::nonneg_of(e);
    return ineq;
}

} // namespace cardmat
