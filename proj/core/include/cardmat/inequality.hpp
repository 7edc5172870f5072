#pragma once

#include "cardmat/cardinality.hpp"
#include "cardmat/matroid.hpp"
#include "cardmat/rational.hpp"
#include "cardmat/subset.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace cardmat {

enum class Sense { le, ge };

struct Provenance {
    enum class Type { rank, fs, lower_bound, upper_bound, nonneg, custom };
    Type type = Type::custom;
    std::optional<Subset> set;        // rank / fs
    std::optional<std::size_t> level; // fs: 1-based index p of the (c_p, c_{p+1}) pair
    std::optional<std::size_t> element; // nonneg

    static Provenance rank_of(Subset f);
    static Provenance fs_of(Subset f, std::size_t level);
    static Provenance lower() { return {Type::lower_bound, {}, {}, {}}; }
    static Provenance upper() { return {Type::upper_bound, {}, {}, {}}; }
    static Provenance nonneg_of(std::size_t e) { return {Type::nonneg, {}, {}, e}; }
};

/// Exact linear inequality sum_e coeffs[e]*x_e  (<= | >=)  rhs.
struct LinearInequality {
    std::vector<Rational> coeffs;
    Sense sense = Sense::le;
    Rational rhs;
    Provenance provenance;

    std::size_t dimension() const { return coeffs.size(); }
    Rational lhs_at(const Point& x) const;
    bool satisfied_by(const Point& x) const;
    bool tight_at(const Point& x) const;
    /// Positive amount by which x violates the inequality; <= 0 when satisfied.
    Rational violation_at(const Point& x) const;
};

Point incidence_vector(const Subset& s);
Rational sum_over(const Point& x, const Subset& s);

struct FsCoefficients {
    long inside;  // coefficient on F
    long outside; // coefficient off F
    long rhs;
};

/// Coefficients of the forbidden-set cut for a set of rank rho lying strictly
/// between consecutive feasible cardinalities: (c_next - rho) on the set,
/// -(rho - c_p) outside, right-hand side c_p * (c_next - rho). Throws
/// "gap-violation" unless c_p < rho < c_next.
FsCoefficients fs_coefficients(std::size_t c_p, std::size_t c_next, std::size_t rho);

/// Rank-induced forbidden set inequality for f. Requires some pair
/// c_p < r(f) < c_{p+1} of consecutive members of c; with extended_zero_level
/// and c_1 > 0 the extra pair (0, c_1) is also admitted. Throws
/// "feasible-rank" when r(f) has no admissible pair.
LinearInequality build_fs(const MatroidInstance& m, const Subset& f,
                          const CardinalitySequence& c,
                          bool extended_zero_level = false);

/// x(f) <= r(f). Throws "empty-set" for empty f.
LinearInequality build_rank_ineq(const MatroidInstance& m, const Subset& f);

LinearInequality lower_bound_ineq(std::size_t n, std::size_t c1); // x(E) >= c_1
LinearInequality upper_bound_ineq(std::size_t n, std::size_t cm); // x(E) <= c_m
LinearInequality nonneg_ineq(std::size_t n, std::size_t e);       // x_e >= 0

} // namespace cardmat
