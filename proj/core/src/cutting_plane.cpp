#include "cardmat/cutting_plane.hpp"

#include "cardmat/errors.hpp"

namespace cardmat {

CuttingPlaneResult cutting_plane_optimize(const MatroidInstance& m, const CardinalitySequence& c,
                                          const WeightVector& obj, std::size_t iteration_limit) {
    c.require_pair();
    if (obj.size() != m.size())
        fail("dimension-mismatch", "one objective coefficient per element required");
    const std::size_t n = m.size();
    if (iteration_limit == 0)
        iteration_limit = std::size_t(10) << std::min<std::size_t>(n, 16);

    InequalitySystem sys(n);
    sys.add(lower_bound_ineq(n, c.front()));
    sys.add(upper_bound_ineq(n, c.back()));
    for (std::size_t e = 0; e < n; ++e) sys.add(nonneg_ineq(n, e));
    for (std::size_t e = 0; e < n; ++e)
        sys.add(build_rank_ineq(m, Subset::single(e, n))); // x_e <= 1, loopless

    CuttingPlaneResult result;
    while (true) {
        if (result.iterations >= iteration_limit)
            fail("iteration-limit", "cutting-plane loop exceeded " +
                                        std::to_string(iteration_limit) + " iterations");
        ++result.iterations;
        LpSolution sol = simplex_max(sys, obj);
        SeparationOutcome out = separate_point(m, sol.point, c);
        if (!out.violated()) {
            result.point = std::move(sol.point);
            result.value = std::move(sol.value);
            result.cuts = sys.rows;
            return result;
        }
        sys.add(*out.cut);
    }
}

} // namespace cardmat
