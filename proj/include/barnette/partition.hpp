#pragma once

#include <optional>
#include <string>
#include <vector>

#include "barnette/plane_graph.hpp"
#include "barnette/triangulation.hpp"

namespace barnette {

// Two-part vertex partition; part_of[v] in {0, 1}.
struct ForestBipartition {
    std::vector<int> part_of;
    std::vector<int> part(int which) const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(part_of.size()); ++v)
            if (part_of[v] == which) out.push_back(v);
        return out;
    }
};

struct CompatibilityWitness {
    bool compatible = true;
    // Per facial 4-cycle: the witnessing non-consecutive pair, or the face id
    // that fails.
    struct FaceWitness {
        int face = -1;
        int u = -1, v = -1;  // witness pair when found
        bool ok = false;
    };
    std::vector<FaceWitness> faces;
    int first_violation() const {
        for (const auto& f : faces)
            if (!f.ok) return f.face;
        return -1;
    }
};

// Definition of compatibility: every facial 4-cycle has a non-consecutive
// pair in the same part and same type, or in different parts and different
// types.
CompatibilityWitness is_compatible(const PlaneGraph& J, const TriColoring& types,
                                   const ForestBipartition& K);

// K = {(J1 u J2) \ I, J3 u I}; part 0 is (J1 u J2) \ I, part 1 is J3 u I.
// I must be an independent subset of J1 u J2. Compatibility is asserted.
ForestBipartition independent_shift_partition(const PlaneGraph& J, const TriColoring& types,
                                   const std::vector<int>& I);

struct ForestCheck {
    bool is_forest = true;
    std::vector<int> cycle;  // witness when not
};

ForestCheck induces_forest(const PlaneGraph& g, const std::vector<int>& S);
ForestCheck induces_forest(const PlaneGraph& g, const std::vector<char>& in_set);

// Both parts induce forests; throws contract_breach with the cycle otherwise.
void require_forest_bipartition(const PlaneGraph& g, const ForestBipartition& K);

}  // namespace barnette
