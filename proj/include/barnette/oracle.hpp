#pragma once

#include <cstdint>
#include <vector>

#include "barnette/plane_graph.hpp"

namespace barnette::oracle {

struct HamiltonEnumeration {
    long long count = 0;
    // Cycles as canonical edge sets (sorted endpoint pairs).
    std::vector<std::vector<std::pair<int, int>>> cycles;
};

// Exhaustive backtracking enumeration of Hamilton cycles; cap guards runtime.
HamiltonEnumeration enumerate_hamilton_cycles(const PlaneGraph& g, int cap = 32);

// All unordered 2-partitions (empty side allowed) with both sides inducing
// forests.
long long enumerate_forest_bipartitions(const PlaneGraph& g, int cap = 20);

struct OracleReport {
    long long hamilton_count = 0;
    long long forest_bipartition_count = 0;
    bool agreement = false;  // hamilton on the dual <=> forest split exists
};

// The equivalence under test: dual Hamiltonicity against exhaustive forest
// bipartitions of the triangulation.
OracleReport cross_check_stein(const PlaneGraph& g, int hamilton_cap = 32, int forest_cap = 20);

}  // namespace barnette::oracle
