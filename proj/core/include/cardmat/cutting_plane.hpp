#pragma once

#include "cardmat/cardinality.hpp"
#include "cardmat/separation.hpp"
#include "cardmat/simplex.hpp"

#include <cstddef>
#include <vector>

namespace cardmat {

struct CuttingPlaneResult {
    Point point;
    Rational value;
    std::vector<LinearInequality> cuts; // final working system, seeds included
    std::size_t iterations = 0;         // simplex/separation rounds
};

/// max obj·x over P^c by lazy separation: seed with the cardinality bounds,
/// nonnegativity and singleton rank cuts, then alternate simplex_max and
/// separate_point until the optimum is certified inside. iteration_limit 0
/// selects the default 10 * 2^min(|E|,16); exceeding it throws
/// "iteration-limit" (diagnostic only — the cut classes are finite).
CuttingPlaneResult cutting_plane_optimize(const MatroidInstance& m,
                                          const CardinalitySequence& c,
                                          const WeightVector& obj,
                                          std::size_t iteration_limit = 0);

} // namespace cardmat
