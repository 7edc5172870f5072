#pragma once

#include "cardmat/cardinality.hpp"
#include "cardmat/inequality.hpp"
#include "cardmat/matroid.hpp"
#include "cardmat/rational.hpp"
#include "cardmat/subset.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace cardmat {

inline constexpr std::size_t kDefaultBruteforceLimit = 20;

/// Optimality certificate for max { y(E) : y in P_M, y <= x }: y as an
/// explicit convex combination of independent sets together with a set
/// f_star attaining the min-max bound value = y(E) = r(f_star) + x(E\f_star).
struct MinMaxCertificate {
    Point y;
    std::vector<std::pair<Rational, Subset>> decomposition;
    Subset f_star;
    Rational value;
};

struct SeparationOutcome {
    enum class Status { inside, violated };
    Status status = Status::inside;
    std::optional<LinearInequality> cut; // set when violated
    std::optional<Subset> witness;
    Rational violation;                  // amount by which the cut is violated
    std::optional<MinMaxCertificate> certificate;
    std::optional<Rational> delta;       // scaling factor, when the gap path ran

    bool violated() const { return status == Status::violated; }
};

/// Exhaustive maximization of x(F) - r(F) over all subsets; ties resolve to
/// the smallest cardinality, then lexicographically. The value is >= 0 (the
/// empty set scores 0). Throws "size-limit-exceeded", "negative-coordinate".
std::pair<Subset, Rational> separate_rank_bruteforce(const MatroidInstance& m, const Point& x,
                                                     std::size_t limit = kDefaultBruteforceLimit);

/// Augmenting-path engine: maximizes y(E) over { y in P_M : y <= x } by
/// shortest-path augmentations in the exchange digraph of the current convex
/// decomposition, and returns the reachable-set minimizer of
/// r(F) + x(E\F). Equivalently, f_star maximizes x(F) - r(F), with
/// max_F x(F)-r(F) = x(E) - value. Throws "negative-coordinate".
MinMaxCertificate separate_rank_augpath(const MatroidInstance& m, const Point& x);

enum class FsEngine {
    automatic, // top-weight fast path on the free matroid, scaling otherwise
    scaling,   // reduction to rank separation at x/delta
    fast_free, // per-forbidden-size top-k sets; free matroid only
};

/// Separation over the forbidden-set class for a point already satisfying all
/// rank inequalities (checked only when check_rank_precondition, throwing
/// "rank-inequality-violated"). Points whose total lies on a feasible
/// cardinality or outside [c_1, c_m] are reported inside — no cut of this
/// class can be violated there.
SeparationOutcome separate_fs(const MatroidInstance& m, const Point& x,
                              const CardinalitySequence& c,
                              FsEngine engine = FsEngine::automatic,
                              bool check_rank_precondition =
#ifdef NDEBUG
                                  false
#else
                                  true
#endif
);

/// Full ordered routine: nonnegativity, lower and upper cardinality bound,
/// rank inequalities (augmenting-path engine), then the forbidden-set class.
/// Returns the first violated cut, or inside with a min-max certificate.
SeparationOutcome separate_point(const MatroidInstance& m, const Point& x,
                                 const CardinalitySequence& c);

} // namespace cardmat
