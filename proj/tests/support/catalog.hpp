#pragma once

#include "cardmat/cardinality.hpp"
#include "cardmat/matroid.hpp"

#include <string>
#include <vector>

namespace cardmat::testing {

inline MatroidInstance u43() { return MatroidInstance::uniform(4, 3); }
inline MatroidInstance u54() { return MatroidInstance::uniform(5, 4); }

inline MatroidInstance triangle() {
    return MatroidInstance::graphic(3, {{0, 1}, {0, 2}, {1, 2}});
}

// Edge order: 01, 02, 03, 12, 13, 23.
inline MatroidInstance k4() {
    return MatroidInstance::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline MatroidInstance partition22() {
    return MatroidInstance::partition(4, {{0, 1}, {2, 3}}, {1, 1});
}

inline MatroidInstance free5() { return MatroidInstance::free_matroid(5); }

inline MatroidInstance gf2_triple() {
    return MatroidInstance::linear_gf2({"10", "01", "11"});
}

inline MatroidInstance explicit_u32() {
    return MatroidInstance::explicit_family(3, {{0, 1}, {0, 2}, {1, 2}});
}

/// Wheel graph W_k: hub 0, rim 1..k; 2k edges (spokes first), rank k.
inline MatroidInstance wheel(int spokes) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= spokes; ++i) edges.emplace_back(0, i);
    for (int i = 1; i <= spokes; ++i) edges.emplace_back(i, i % spokes + 1);
    return MatroidInstance::graphic(static_cast<std::size_t>(spokes + 1), std::move(edges));
}

struct CatalogEntry {
    std::string id;
    MatroidInstance m;
    CardinalitySequence c;
};

/// The named instance/sequence pairs used by the acceptance checks.
inline std::vector<CatalogEntry> acceptance_catalog() {
    std::vector<CatalogEntry> entries;
    entries.push_back({"u43-c13", u43(), CardinalitySequence({1, 3})});
    entries.push_back({"u54-c13", u54(), CardinalitySequence({1, 3})});
    entries.push_back({"u54-c24", u54(), CardinalitySequence({2, 4})});
    entries.push_back({"triangle-c12", triangle(), CardinalitySequence({1, 2})});
    entries.push_back({"k4-c13", k4(), CardinalitySequence({1, 3})});
    entries.push_back({"partition-c02", partition22(), CardinalitySequence({0, 2})});
    entries.push_back({"free5-c13", free5(), CardinalitySequence({1, 3})});
    entries.push_back({"free5-c14", free5(), CardinalitySequence({1, 4})});
    return entries;
}

/// Instances for property sweeps beyond the acceptance catalog.
inline std::vector<std::pair<std::string, MatroidInstance>> property_matroids() {
    return {
        {"u43", u43()},
        {"u54", u54()},
        {"triangle", triangle()},
        {"k4", k4()},
        {"partition22", partition22()},
        {"free5", free5()},
        {"gf2-triple", gf2_triple()},
        {"explicit-u32", explicit_u32()},
    };
}

} // namespace cardmat::testing
