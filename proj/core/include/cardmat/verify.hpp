#pragma once

#include "cardmat/cardinality.hpp"
#include "cardmat/matroid.hpp"
#include "cardmat/simplex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cardmat {

/// The finite linear description of P^c: rank inequalities on every nonempty
/// closed set (non-closed ones are dominated), the forbidden-set inequalities
/// for every admissible set, the two cardinality bounds and nonnegativity.
/// include_fs=false drops the forbidden-set class (ablation runs).
InequalitySystem build_full_system(const MatroidInstance& m, const CardinalitySequence& c,
                                   bool include_fs = true,
                                   std::size_t limit = kDefaultEnumerationLimit);

struct CompletenessFailure {
    std::size_t trial = 0;
    std::vector<long> objective;
    Rational lp_value;
    Rational combinatorial_value;
    Point lp_point;
};

struct VerificationReport {
    std::string instance_id;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<CompletenessFailure> failures;
    bool passed = false; // failures empty
    double elapsed_seconds = 0.0;
};

/// Randomized completeness check: for seeded integer objectives in [-10, 10],
/// the LP optimum over the full system must equal the maximum over the
/// enumerated vertices, exactly; every vertex must satisfy the system. Any
/// failure replays from (instance, seed, trial index).
VerificationReport verify_completeness(const MatroidInstance& m, const CardinalitySequence& c,
                                       std::size_t trials, std::uint64_t seed,
                                       std::string instance_id = "",
                                       bool include_fs = true,
                                       std::size_t limit = kDefaultEnumerationLimit);

struct IntersectionCandidate {
    std::size_t trial = 0;
    std::vector<long> objective;
    Rational lp_value;
    Rational combinatorial_value;
    Point lp_point;
};

struct IntersectionProbeReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<IntersectionCandidate> candidates; // empty: no counterexample found
};

/// Experimental probe: compares the combinatorial optimum over the common
/// independent sets of feasible cardinality against the LP optimum over the
/// union of both matroids' full systems. A trial where the LP strictly
/// exceeds is recorded as a conjecture counterexample candidate; nothing is
/// asserted either way. Throws "ground-set-mismatch" on unequal ground sets.
IntersectionProbeReport probe_intersection_conjecture(const MatroidInstance& m1,
                                                      const MatroidInstance& m2,
                                                      const CardinalitySequence& c,
                                                      std::size_t trials, std::uint64_t seed,
                                                      std::size_t limit = kDefaultEnumerationLimit);

} // namespace cardmat
